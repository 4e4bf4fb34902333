#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

#include "zolo/conformal.hpp"

namespace zolo {

// Quadrature of a closed contour together with samples of the function being filtered.
struct FilterContour {
  double offset = 0;  // distance from the boundary it was pushed off
  BoundaryQuadrature quad;
  std::vector<cplx> values;
};

// R_n is the Cauchy filter of Phi^n over dE; 1/r_n is the Cauchy filter of 1/R_n over a
// contour eta around F. Both integrals run over contours pushed a small distance into the
// doubly connected domain, so that no evaluation ever meets a principal value. Each side
// keeps two contours, at delta and delta/2, and a point uses the one it is relatively
// farther from. Case A1 only.
class FaberContext {
 public:
  const ConformalMap& map() const { return *map_; }
  std::shared_ptr<const ConformalMap> map_ptr() const { return map_; }
  int degree() const { return n_; }
  double h() const { return map_->h(); }

  const BoundaryQuadrature& quadE() const { return quadE_; }
  const BoundaryQuadrature& quadF() const { return quadF_; }
  const std::vector<cplx>& phiN_on_E() const { return phiN_on_E_; }
  const std::vector<cplx>& Rn_on_F() const { return Rn_on_F_; }
  cplx Rn_at_infinity() const { return Rn_inf_; }
  // max over dE of |R_n|, so C_n = 1 + max_Rn_on_E().
  double max_Rn_on_E() const { return maxRnE_; }
  // max over the dE quadrature nodes of |Phi|^n.
  double max_phiN_on_E() const { return maxPhiNE_; }

  const std::array<FilterContour, 2>& gamma() const { return gamma_; }
  const std::array<FilterContour, 2>& eta() const { return eta_; }
  int samples() const { return nq_; }

 private:
  friend FaberContext build_context(std::shared_ptr<const ConformalMap>, int, int);
  std::shared_ptr<const ConformalMap> map_;
  int n_ = 0, nq_ = 0;
  BoundaryQuadrature quadE_, quadF_;
  std::vector<cplx> phiN_on_E_, Rn_on_F_;
  cplx Rn_inf_ = 1;
  double maxRnE_ = 1, maxPhiNE_ = 1;
  std::array<FilterContour, 2> gamma_, eta_;
};

// n >= 0 (n = 0 gives r_0 = 1), nq >= 64 boundary samples per set.
FaberContext build_context(std::shared_ptr<const ConformalMap> map, int n, int nq = 512);
FaberContext build_context(const MobiusMap& map, int n, int nq = 512);
FaberContext build_context(const AnnulusMap& map, int n, int nq = 512);

// R_n(z) for z outside the interior of F.
cplx eval_Rn(const FaberContext& ctx, cplx z);

struct InvRn {
  cplx value;               // 1/r_n(z); meaningless when pole_proxy is set
  bool pole_proxy = false;  // R_n(z) vanished to working accuracy: z is a zero of r_n
};
InvRn eval_inv_rn(const FaberContext& ctx, cplx z);

// r_n(z); zeros of R_n outside eta give zeros of r_n without special handling.
cplx eval_rn(const FaberContext& ctx, cplx z);

// max over dE of |r_n| divided by min over dF of |r_n|.
double empirical_ratio(const FaberContext& ctx);

struct BoundaryExtremum {
  double value;  // |f| at the extremum
  double t;      // boundary parameter
  cplx z;
};
// Extremum of |f| over a boundary, by dense parameter sampling and Brent refinement.
BoundaryExtremum boundary_max(const Region& r, int samples, const std::function<double(cplx)>& f);

// Number of zeros of R_n inside a curve around E on which Rouche's condition holds; this
// equals n for a correct context. Throws NumericalFailure("zero count not certified at this
// n") when no such curve exists inside the domain.
int count_zeros(const FaberContext& ctx);

}  // namespace zolo

#pragma once

#include <memory>
#include <vector>

#include "zolo/geometry.hpp"

namespace zolo {

// A1: E and F both bounded. A2: F is the exterior of a shape whose hole contains E.
enum class Variant { A1, A2 };

// Conformal map Phi of the doubly connected region between E and F onto 1 < |w| < h,
// with dE -> |w| = 1 and dF -> |w| = h.
class ConformalMap {
 public:
  virtual ~ConformalMap() = default;

  // Phi(z) without checking the domain; the analytic expression is used as is.
  virtual cplx evaluate(cplx z) const = 0;
  // log Phi(z) up to a multiple of 2 pi i.
  virtual cplx log_phi(cplx z) const { return std::log(evaluate(z)); }
  // Phi(z) for z in the closure of the domain; throws InvalidInput otherwise.
  cplx phi(cplx z) const;

  virtual double h() const = 0;
  virtual double residual() const = 0;
  virtual Variant variant() const = 0;
  // Value at infinity (A1 only).
  virtual cplx at_infinity() const = 0;
  // Boundary point z with Phi(z) = w for |w| = 1 (on dE) or |w| = h (on dF).
  virtual cplx psi_boundary(cplx w) const = 0;

  const Region& E() const { return E_; }
  const Region& F() const { return F_; }

 protected:
  ConformalMap(Region E, Region F) : E_(std::move(E)), F_(std::move(F)) {}
  Region E_, F_;
};

// Phi(z) = (a z + b) / (c z + d).
class MobiusMap final : public ConformalMap {
 public:
  MobiusMap(Region E, Region F, cplx a, cplx b, cplx c, cplx d, double h);

  cplx evaluate(cplx z) const override { return (a_ * z + b_) / (c_ * z + d_); }
  double h() const override { return h_; }
  double residual() const override { return residual_; }
  Variant variant() const override { return Variant::A1; }
  cplx at_infinity() const override { return a_ / c_; }
  cplx psi_boundary(cplx w) const override;
  // Inverse map valid for any w.
  cplx inverse(cplx w) const { return (d_ * w - b_) / (-c_ * w + a_); }

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }

 private:
  cplx a_, b_, c_, d_;
  double h_, residual_;
};

// Exact map for two disjoint disks.
MobiusMap mobius_two_disks(const Region& E, const Region& F);

struct SolverConfig {
  double tolerance = 1e-8;
  int max_degree = 128;
  int n_samples = 512;      // starting boundary samples per set; grown to keep the fit overdetermined
  int max_poles = 80;       // clustered poles per corner
  double taper = 4.0;       // pole spacing parameter
};

struct PoleTerm {
  cplx location;
  double scale;  // basis function is scale / (z - location)
  cplx coeff;
};

// log Phi = log(z - zE) - log(z - zF) + g(z) in case A1, log(z - zE) + g(z) in case A2, with
// g(z) = c0 + sum_k a_k P_k(u) + sum_k b_k Q_k(v) + sum_l q_l s_l / (z - p_l),
// u = rhoE / (z - zE), and v = rhoF / (z - zF) (A1) or v = (z - zE) / rhoF (A2).
// P_k and Q_k are degree-k polynomials orthonormalised on the fitting samples by an Arnoldi
// recurrence (stored in hessE, hessF), which keeps the basis well conditioned on elongated
// boundaries where plain powers of u span many orders of magnitude.
class AnnulusMap final : public ConformalMap {
 public:
  struct Data {
    Variant variant = Variant::A1;
    cplx zE = 0, zF = 0;
    double rhoE = 1, rhoF = 1;
    double c0 = 0;
    std::vector<cplx> laurentE, laurentF;
    std::vector<std::vector<cplx>> hessE, hessF;  // entry k-1 holds h_k[0..k]
    std::vector<PoleTerm> poles;
    double h = 1, residual = 0;
  };

  AnnulusMap(Region E, Region F, Data data);

  cplx evaluate(cplx z) const override { return std::exp(log_phi(z)); }
  cplx log_phi(cplx z) const override;
  double h() const override { return d_.h; }
  double residual() const override { return d_.residual; }
  Variant variant() const override { return d_.variant; }
  cplx at_infinity() const override;
  cplx psi_boundary(cplx w) const override;

  const Data& data() const { return d_; }

 private:
  struct Correspondence {
    std::vector<double> t;      // boundary parameters
    std::vector<double> theta;  // unwrapped arg Phi, strictly increasing over one period
  };
  Correspondence build_correspondence(bool onE) const;
  cplx boundary_point(bool onE, double u) const;

  Data d_;
  Correspondence corrE_, corrF_;
};

AnnulusMap solve_annulus_map(const Region& E, const Region& F, const SolverConfig& cfg = {});

// The exact Mobius map for two bounded disks, the fitted annulus map otherwise.
std::shared_ptr<const ConformalMap> solve_map(const Region& E, const Region& F, const SolverConfig& cfg = {});

}  // namespace zolo

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "zolo/conformal.hpp"
#include "zolo/faber.hpp"

namespace zolo {

enum class ShiftKind { faber, fejer, leja };

struct ShiftSet {
  ShiftKind kind = ShiftKind::leja;
  std::vector<cplx> kappa;  // zeros of s_k, near E
  std::vector<cplx> tau;    // poles of s_k, near F
  std::vector<std::string> diagnostics;
  int k() const { return int(kappa.size()); }
};

const char* to_string(ShiftKind kind);
ShiftKind shift_kind_from_string(const std::string& s);

// A X - X B = M with a reference solution X.
struct SylvesterProblem {
  Eigen::MatrixXcd A, B, M, X;
};

// Diagonal A (m x m) and B (p x p) with eigenvalues uniform in E and F, M with independent
// standard complex normal entries, and X from sylvester_solve.
SylvesterProblem diagonal_problem(const Region& E, const Region& F, int m, int p, std::uint64_t seed);

// Bartels-Stewart with complex Schur forms.
Eigen::MatrixXcd sylvester_solve(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                 const Eigen::MatrixXcd& M);

// Spectral norm by power iteration on X^* X: 200 steps or relative change below 1e-8.
double norm2(const Eigen::MatrixXcd& X);

struct AdiHistory {
  std::vector<Eigen::MatrixXcd> iterates;  // X^(0..k) when kept
  std::vector<double> rel_error;           // ||X - X^(j)||_2 / ||X||_2, j = 0..k
};

// k ADI steps from X^(0) = 0 with the given shifts, using dense LU solves.
AdiHistory adi_iterate(const SylvesterProblem& problem, const ShiftSet& shifts, int k,
                       bool keep_iterates = false);

// max over dE samples of |s_k| / min over dF samples of |s_k| with
// s_k(z) = prod (z - kappa_j) / (z - tau_j), accumulated in log magnitude.
double error_certificate(const ShiftSet& shifts, const BoundaryQuadrature& quadE, const BoundaryQuadrature& quadF);
double error_certificate(const ShiftSet& shifts, const std::vector<cplx>& onE, const std::vector<cplx>& onF);

// Zeros and poles of r_k from two AAA fits (samples on dE for zeros, on dF for poles).
ShiftSet faber_shifts(const FaberContext& ctx, int k, int samples = 2000);
// Preimages of k equispaced points on |w| = 1 and |w| = h; tau = -conj(kappa) when the pair
// is symmetric in that way.
ShiftSet fejer_shifts(const ConformalMap& map, int k);
// Greedy selection on boundary samples (at least 500 per set).
ShiftSet leja_shifts(const BoundaryQuadrature& quadE, const BoundaryQuadrature& quadF, int k);

}  // namespace zolo

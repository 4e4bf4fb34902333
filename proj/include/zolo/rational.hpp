#pragma once

#include <vector>

#include "zolo/errors.hpp"

namespace zolo {

// r(z) = sum w_j f_j / (z - z_j) / sum w_j / (z - z_j).
struct BarycentricRational {
  std::vector<cplx> support, values, weights;
  double residual = 0;     // max deviation over the fitted samples
  bool stagnated = false;  // the fit stopped improving before reaching the tolerance
  int degree() const { return int(support.size()) - 1; }
};

// AAA: greedy support selection at the largest current deviation, weights from the smallest
// right singular vector of the Loewner matrix. Stops at residual <= tol * max|values| or at
// max_degree, and after 5 steps without improvement (best fit returned, stagnated = true).
BarycentricRational aaa_fit(const std::vector<cplx>& z, const std::vector<cplx>& f, double tol = 1e-13,
                            int max_degree = 100);

cplx bary_eval(const BarycentricRational& r, cplx z);

struct PolesZeros {
  std::vector<cplx> poles, zeros;
};

// Finite eigenvalues of the arrowhead pencils [0 w^T; 1 diag(z)] - lambda diag(0, 1, ..., 1),
// with w replaced by w .* f for the zeros. Eigenvalues beyond 1e6 * diameter of the support
// or failing a relative residual test at 1e-6 are discarded, as are pole/zero pairs closer
// than 1e-10 * diameter whose residue is negligible.
PolesZeros poles_zeros(const BarycentricRational& r);

}  // namespace zolo

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "zolo/errors.hpp"

namespace zolo {

// C_jk = 1 / (x_j - y_k). Throws InvalidInput for repeated or shared nodes.
Eigen::MatrixXcd cauchy_matrix(const std::vector<cplx>& x, const std::vector<cplx>& y);
// V_jk = a_j^k, k = 0..p-1. Throws InvalidInput for repeated nodes.
Eigen::MatrixXcd vandermonde_matrix(const std::vector<cplx>& a, int p);
// p x p cyclic down-shift: Q(k+1, k) = 1, Q(0, p-1) = 1.
Eigen::MatrixXcd circulant_shift(int p);

// D_x C - C D_y (all ones for an exact Cauchy matrix).
Eigen::MatrixXcd cauchy_displacement(const std::vector<cplx>& x, const std::vector<cplx>& y,
                                      const Eigen::MatrixXcd& C);
// D_a V - V Q (nonzero only in the last column).
Eigen::MatrixXcd vandermonde_displacement(const std::vector<cplx>& a, const Eigen::MatrixXcd& V);

// Modulus of the annulus between the disk |z - z0| <= eta0 and the exterior of the unit disk.
// z0 = 0 gives 1 / eta0. Throws InvalidInput unless the disk lies in the open unit disk.
double vandermonde_h(cplx z0, double eta0);

// Entry j bounds sigma_{j nu + 1}: zj[j] * sigma1.
std::vector<double> singular_value_bounds(const std::vector<double>& zj, int nu, double sigma1);

// All singular values in descending order.
std::vector<double> singular_values(const Eigen::MatrixXcd& A);

}  // namespace zolo

#include "zolo/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace zolo {

namespace {

void check_distinct(const std::vector<cplx>& a, const char* what) {
  std::set<std::pair<double, double>> seen;
  for (auto z : a) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput(std::string(what) + ": non-finite node");
    if (!seen.insert({z.real(), z.imag()}).second) throw InvalidInput(std::string(what) + ": repeated node");
  }
}

}  // namespace

Eigen::MatrixXcd cauchy_matrix(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  check_distinct(x, "cauchy_matrix");
  check_distinct(y, "cauchy_matrix");
  Eigen::MatrixXcd C(x.size(), y.size());
  for (std::size_t j = 0; j < x.size(); ++j)
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (x[j] == y[k]) throw InvalidInput("cauchy_matrix: node sets are not disjoint");
      C(j, k) = 1.0 / (x[j] - y[k]);
    }
  return C;
}

Eigen::MatrixXcd vandermonde_matrix(const std::vector<cplx>& a, int p) {
  if (p < 1) throw InvalidInput("vandermonde_matrix: p must be positive");
  check_distinct(a, "vandermonde_matrix");
  Eigen::MatrixXcd V(a.size(), p);
  for (std::size_t j = 0; j < a.size(); ++j) {
    cplx v = 1;
    for (int k = 0; k < p; ++k, v *= a[j]) V(j, k) = v;
  }
  return V;
}

Eigen::MatrixXcd circulant_shift(int p) {
  if (p < 1) throw InvalidInput("circulant_shift: p must be positive");
  Eigen::MatrixXcd Q = Eigen::MatrixXcd::Zero(p, p);
  for (int k = 0; k + 1 < p; ++k) Q(k + 1, k) = 1.0;
  Q(0, p - 1) = 1.0;
  return Q;
}

Eigen::MatrixXcd cauchy_displacement(const std::vector<cplx>& x, const std::vector<cplx>& y,
                                      const Eigen::MatrixXcd& C) {
  Eigen::MatrixXcd R(C.rows(), C.cols());
  for (Eigen::Index j = 0; j < C.rows(); ++j)
    for (Eigen::Index k = 0; k < C.cols(); ++k) R(j, k) = x[j] * C(j, k) - C(j, k) * y[k];
  return R;
}

Eigen::MatrixXcd vandermonde_displacement(const std::vector<cplx>& a, const Eigen::MatrixXcd& V) {
  Eigen::VectorXcd d(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) d(j) = a[j];
  return d.asDiagonal() * V - V * circulant_shift(int(V.cols()));
}

double vandermonde_h(cplx z0, double eta0) {
  const double r = std::abs(z0);
  if (!(eta0 > 0) || !(r + eta0 < 1)) throw InvalidInput("vandermonde_h: disk must lie inside the open unit disk");
  if (r == 0) return 1 / eta0;
  const double c = r * r - eta0 * eta0;
  // smaller root of r beta^2 - (1 + c) beta + r = 0, written without cancellation
  const double beta = 2 * r / (1 + c + std::sqrt((1 + c) * (1 + c) - 4 * r * r));
  const cplx w = z0 + eta0;
  return std::abs((z0 - r * beta * w) / (r * w - beta * z0));
}

std::vector<double> singular_value_bounds(const std::vector<double>& zj, int nu, double sigma1) {
  if (nu < 1) throw InvalidInput("singular_value_bounds: nu must be positive");
  if (!zj.empty() && zj[0] > 1) throw InvalidInput("singular_value_bounds: Z_0 must be at most 1");
  std::vector<double> out;
  out.reserve(zj.size());
  for (double z : zj) out.push_back(z * sigma1);
  return out;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& A) {
  if (!A.allFinite()) throw InvalidInput("singular_values: non-finite entries");
  if (A.size() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

}  // namespace zolo

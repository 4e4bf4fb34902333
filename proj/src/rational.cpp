#include "zolo/rational.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace zolo {

namespace {

struct Sums {
  cplx num, den;
  double absnum, absden;
};

Sums sums_at(const BarycentricRational& r, cplx z) {
  Sums s{0, 0, 0, 0};
  for (std::size_t j = 0; j < r.support.size(); ++j) {
    const cplx c = 1.0 / (z - r.support[j]);
    s.num += r.weights[j] * r.values[j] * c;
    s.den += r.weights[j] * c;
    s.absnum += std::abs(r.weights[j] * r.values[j] * c);
    s.absden += std::abs(r.weights[j] * c);
  }
  return s;
}

double support_diameter(const std::vector<cplx>& z) {
  double x0 = z[0].real(), x1 = x0, y0 = z[0].imag(), y1 = y0;
  for (auto v : z) {
    x0 = std::min(x0, v.real());
    x1 = std::max(x1, v.real());
    y0 = std::min(y0, v.imag());
    y1 = std::max(y1, v.imag());
  }
  return std::max(std::hypot(x1 - x0, y1 - y0), 1e-300);
}

cplx support_centre(const std::vector<cplx>& z) {
  cplx c = 0;
  for (auto v : z) c += v;
  return c / double(z.size());
}

// Finite eigenvalues of [0 a^T; 1 diag(z)] - lambda diag(0, 1, ..., 1) by shift-and-invert.
std::vector<cplx> pencil_eigenvalues(const std::vector<cplx>& z, const std::vector<cplx>& a) {
  const int m = int(z.size()), N = m + 1;
  Eigen::MatrixXcd E = Eigen::MatrixXcd::Zero(N, N), B = Eigen::MatrixXcd::Zero(N, N);
  for (int j = 0; j < m; ++j) {
    E(0, j + 1) = a[j];
    E(j + 1, 0) = 1.0;
    E(j + 1, j + 1) = z[j];
    B(j + 1, j + 1) = 1.0;
  }
  const cplx c = support_centre(z);
  const double diam = support_diameter(z);
  for (const cplx off : {cplx(0.37, 0.61), cplx(-0.53, 0.29), cplx(0.71, -0.83)}) {
    const cplx alpha = c + diam * off;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(E - alpha * B);
    const double rc = lu.rcond();
    if (!(rc > 1e-14)) continue;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(lu.solve(B), false);
    if (es.info() != Eigen::Success) continue;
    const auto& mu = es.eigenvalues();
    const double mumax = mu.cwiseAbs().maxCoeff();
    std::vector<cplx> out;
    for (int k = 0; k < N; ++k)
      if (std::abs(mu(k)) > 1e-13 * mumax) out.push_back(alpha + 1.0 / mu(k));
    return out;
  }
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(E - c * B);
  std::ostringstream os;
  os << "poles_zeros: eigensolver failed, pencil reciprocal condition " << lu.rcond();
  throw NumericalFailure(os.str());
}

}  // namespace

cplx bary_eval(const BarycentricRational& r, cplx z) {
  for (std::size_t j = 0; j < r.support.size(); ++j)
    if (z == r.support[j]) return r.values[j];
  const Sums s = sums_at(r, z);
  return s.num / s.den;
}

BarycentricRational aaa_fit(const std::vector<cplx>& z, const std::vector<cplx>& f, double tol,
                            int max_degree) {
  const int M = int(z.size());
  if (M != int(f.size())) throw InvalidInput("aaa_fit: points and values differ in size");
  if (M < 4) throw InvalidInput("aaa_fit: at least 4 samples are required");
  if (!(tol > 0)) throw InvalidInput("aaa_fit: tolerance must be positive");
  if (max_degree < 0) throw InvalidInput("aaa_fit: max_degree must be non-negative");
  double fmax = 0;
  cplx fmean = 0;
  for (int i = 0; i < M; ++i) {
    if (!std::isfinite(std::abs(z[i])) || !std::isfinite(std::abs(f[i])))
      throw InvalidInput("aaa_fit: non-finite sample");
    fmax = std::max(fmax, std::abs(f[i]));
    fmean += f[i];
  }
  fmean /= double(M);

  std::vector<char> used(M, 0);
  std::vector<int> sup;
  std::vector<cplx> R(M, fmean);
  BarycentricRational best;
  best.residual = std::numeric_limits<double>::infinity();
  int stale = 0;
  for (int m = 0; m <= std::min(max_degree, M - 2); ++m) {
    int j = -1;
    double worst = -1;
    for (int i = 0; i < M; ++i)
      if (!used[i] && std::abs(f[i] - R[i]) > worst) worst = std::abs(f[i] - R[i]), j = i;
    used[j] = 1;
    sup.push_back(j);
    const int ns = int(sup.size());
    std::vector<int> rows;
    rows.reserve(M - ns);
    for (int i = 0; i < M; ++i)
      if (!used[i]) rows.push_back(i);
    Eigen::MatrixXcd A(rows.size(), ns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (int k = 0; k < ns; ++k)
        A(r, k) = (f[rows[r]] - f[sup[k]]) / (z[rows[r]] - z[sup[k]]);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    const Eigen::VectorXcd w = svd.matrixV().col(ns - 1);

    BarycentricRational fit;
    for (int k = 0; k < ns; ++k) {
      fit.support.push_back(z[sup[k]]);
      fit.values.push_back(f[sup[k]]);
      fit.weights.push_back(w(k));
    }
    double res = 0;
    for (int i = 0; i < M; ++i) {
      R[i] = used[i] ? f[i] : bary_eval(fit, z[i]);
      const double e = std::abs(f[i] - R[i]);
      res = std::isfinite(e) ? std::max(res, e) : std::numeric_limits<double>::infinity();
    }
    fit.residual = res;
    if (res < best.residual) {
      best = std::move(fit);
      stale = 0;
    } else if (++stale >= 5) {
      best.stagnated = true;
      break;
    }
    if (best.residual <= tol * fmax) break;
  }
  return best;
}

PolesZeros poles_zeros(const BarycentricRational& r) {
  if (r.support.empty() || r.support.size() != r.weights.size() || r.support.size() != r.values.size())
    throw InvalidInput("poles_zeros: malformed barycentric rational");
  const double diam = support_diameter(r.support);
  const cplx c = support_centre(r.support);
  double fmax = 0;
  for (auto v : r.values) fmax = std::max(fmax, std::abs(v));
  std::vector<cplx> wf(r.weights.size());
  for (std::size_t j = 0; j < wf.size(); ++j) wf[j] = r.weights[j] * r.values[j];

  auto near_support = [&](cplx l) {
    for (std::size_t j = 0; j < r.support.size(); ++j)
      if (std::abs(l - r.support[j]) <= 1e-14 * diam) return int(j);
    return -1;
  };
  PolesZeros out;
  for (cplx l : pencil_eigenvalues(r.support, r.weights)) {
    if (std::abs(l - c) > 1e6 * diam || near_support(l) >= 0) continue;
    const Sums s = sums_at(r, l);
    if (std::abs(s.den) <= 1e-6 * s.absden) out.poles.push_back(l);
  }
  for (cplx l : pencil_eigenvalues(r.support, wf)) {
    if (std::abs(l - c) > 1e6 * diam) continue;
    if (const int j = near_support(l); j >= 0) {
      if (std::abs(r.values[j]) <= 1e-13 * fmax) out.zeros.push_back(l);
      continue;
    }
    const Sums s = sums_at(r, l);
    if (std::abs(s.num) <= 1e-6 * s.absnum) out.zeros.push_back(l);
  }

  // Froissart doublets: a pole and a zero that nearly cancel, with a negligible residue.
  std::vector<char> dropP(out.poles.size(), 0), dropZ(out.zeros.size(), 0);
  for (std::size_t i = 0; i < out.poles.size(); ++i) {
    const cplx p = out.poles[i];
    cplx dD = 0;
    for (std::size_t j = 0; j < r.support.size(); ++j) dD -= r.weights[j] / ((p - r.support[j]) * (p - r.support[j]));
    const double residue = std::abs(sums_at(r, p).num / dD);
    for (std::size_t k = 0; k < out.zeros.size(); ++k) {
      if (dropZ[k] || std::abs(out.zeros[k] - p) >= 1e-10 * diam) continue;
      if (residue < 1e-12 * std::max(fmax, 1e-300) * diam) {
        dropP[i] = dropZ[k] = 1;
        break;
      }
    }
  }
  PolesZeros clean;
  for (std::size_t i = 0; i < out.poles.size(); ++i)
    if (!dropP[i]) clean.poles.push_back(out.poles[i]);
  for (std::size_t k = 0; k < out.zeros.size(); ++k)
    if (!dropZ[k]) clean.zeros.push_back(out.zeros[k]);
  return clean;
}

}  // namespace zolo

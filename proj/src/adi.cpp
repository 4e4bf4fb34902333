#include "zolo/adi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "zolo/rational.hpp"

namespace zolo {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double log_abs_s(const ShiftSet& s, cplx z) {
  double v = 0;
  for (int j = 0; j < s.k(); ++j) v += std::log(std::abs(z - s.kappa[j])) - std::log(std::abs(z - s.tau[j]));
  return v;
}

double distance_to_set(const Region& r, cplx z) {
  const double d = r.distance_to_boundary(z);
  if (d <= 1e-12 * r.diameter()) return 0;
  return r.contains(z) ? 0 : d;
}

// The k candidates nearest to the region, padded with the nearest one when too few.
std::vector<cplx> nearest_k(std::vector<cplx> pts, const Region& r, int k, const char* what,
                            std::vector<std::string>& diag) {
  std::stable_sort(pts.begin(), pts.end(),
                   [&](cplx a, cplx b) { return distance_to_set(r, a) < distance_to_set(r, b); });
  if (int(pts.size()) > k) pts.resize(k);
  if (pts.empty()) throw NumericalFailure(std::string("shifts uncertified: no ") + what + " found");
  if (int(pts.size()) < k) {
    std::ostringstream os;
    os << what << ": " << pts.size() << " of " << k << " resolved; padded with the nearest";
    diag.push_back(os.str());
    while (int(pts.size()) < k) pts.push_back(pts.front());
  }
  const double far = 0.05 * r.diameter();
  for (auto p : pts)
    if (distance_to_set(r, p) > far) {
      std::ostringstream os;
      os << what << " " << p << " lies farther than 0.05 * diameter from its set";
      diag.push_back(os.str());
    }
  return pts;
}

}  // namespace

const char* to_string(ShiftKind kind) {
  switch (kind) {
    case ShiftKind::faber:
      return "faber";
    case ShiftKind::fejer:
      return "fejer";
    default:
      return "leja";
  }
}

ShiftKind shift_kind_from_string(const std::string& s) {
  if (s == "faber") return ShiftKind::faber;
  if (s == "fejer") return ShiftKind::fejer;
  if (s == "leja") return ShiftKind::leja;
  throw InvalidInput("unknown shift kind '" + s + "' (expected faber, fejer or leja)");
}

SylvesterProblem diagonal_problem(const Region& E, const Region& F, int m, int p, std::uint64_t seed) {
  if (m < 1 || p < 1) throw InvalidInput("diagonal_problem: sizes must be positive");
  std::mt19937_64 rng(seed);
  const auto a = random_points(E, m, rng);
  const auto b = random_points(F, p, rng);
  std::normal_distribution<double> nd;
  SylvesterProblem P;
  P.A = Eigen::MatrixXcd::Zero(m, m);
  P.B = Eigen::MatrixXcd::Zero(p, p);
  for (int j = 0; j < m; ++j) P.A(j, j) = a[j];
  for (int j = 0; j < p; ++j) P.B(j, j) = b[j];
  P.M.resize(m, p);
  for (int k = 0; k < p; ++k)
    for (int j = 0; j < m; ++j) {
      const double re = nd(rng), im = nd(rng);
      P.M(j, k) = {re, im};
    }
  P.X = sylvester_solve(P.A, P.B, P.M);
  return P;
}

Eigen::MatrixXcd sylvester_solve(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                 const Eigen::MatrixXcd& M) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || M.rows() != A.rows() || M.cols() != B.rows())
    throw InvalidInput("sylvester_solve: dimension mismatch");
  Eigen::ComplexSchur<Eigen::MatrixXcd> sa(A), sb(B);
  if (sa.info() != Eigen::Success || sb.info() != Eigen::Success)
    throw NumericalFailure("sylvester_solve: Schur decomposition failed");
  const Eigen::MatrixXcd& T = sa.matrixT();
  const Eigen::MatrixXcd& S = sb.matrixT();
  const Eigen::MatrixXcd C = sa.matrixU().adjoint() * M * sb.matrixU();
  Eigen::MatrixXcd Y(C.rows(), C.cols());
  const auto I = Eigen::MatrixXcd::Identity(T.rows(), T.cols());
  for (Eigen::Index k = 0; k < C.cols(); ++k) {
    Eigen::VectorXcd rhs = C.col(k);
    for (Eigen::Index l = 0; l < k; ++l) rhs += Y.col(l) * S(l, k);
    const Eigen::MatrixXcd Tk = T - S(k, k) * I;
    for (Eigen::Index i = 0; i < Tk.rows(); ++i)
      if (std::abs(Tk(i, i)) <= 1e-14 * std::max(1.0, T.cwiseAbs().maxCoeff()))
        throw InvalidInput("sylvester_solve: spectra of A and B intersect");
    Y.col(k) = Tk.triangularView<Eigen::Upper>().solve(rhs);
  }
  return sa.matrixU() * Y * sb.matrixU().adjoint();
}

double norm2(const Eigen::MatrixXcd& X) {
  if (X.size() == 0) return 0;
  Eigen::VectorXcd v(X.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(1.0, 0.37 * double(i) / double(v.size()));
  v.normalize();
  double lam = 0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd w = X.adjoint() * (X * v);
    const double nl = w.norm();
    if (nl == 0) return 0;
    v = w / nl;
    const bool done = std::abs(nl - lam) <= 1e-8 * nl;
    lam = nl;
    if (done) break;
  }
  return std::sqrt(lam);
}

AdiHistory adi_iterate(const SylvesterProblem& P, const ShiftSet& shifts, int k, bool keep) {
  if (k < 0 || k > shifts.k() || int(shifts.tau.size()) != shifts.k())
    throw InvalidInput("adi_iterate: k exceeds the number of shifts");
  const Eigen::Index m = P.A.rows(), p = P.B.rows();
  const auto Im = Eigen::MatrixXcd::Identity(m, m);
  const auto Ip = Eigen::MatrixXcd::Identity(p, p);
  const double nx = norm2(P.X);
  AdiHistory H;
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(m, p);
  auto record = [&]() {
    if (keep) H.iterates.push_back(X);
    H.rel_error.push_back(nx > 0 ? norm2(P.X - X) / nx : 0.0);
  };
  record();
  auto factor = [](const Eigen::MatrixXcd& S) {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(S);
    const auto u = lu.matrixLU().diagonal().cwiseAbs();
    if (!(lu.rcond() > 1e-14) || !(u.minCoeff() > 1e-14 * u.maxCoeff()))
      throw InvalidInput("adi_iterate: shift collides with spectrum");
    return lu;
  };
  for (int j = 0; j < k; ++j) {
    const cplx tau = shifts.tau[j], kappa = shifts.kappa[j];
    const auto luA = factor(P.A - tau * Im);
    const Eigen::MatrixXcd half = luA.solve(X * (P.B - tau * Ip) + P.M);
    const auto luB = factor((P.B - kappa * Ip).transpose());
    X = luB.solve(((P.A - kappa * Im) * half - P.M).transpose()).transpose();
    record();
  }
  return H;
}

double error_certificate(const ShiftSet& s, const std::vector<cplx>& onE, const std::vector<cplx>& onF) {
  if (onE.empty() || onF.empty()) throw InvalidInput("error_certificate: empty sample set");
  if (s.k() == 0) return 1.0;
  double top = -inf, bottom = inf;
  for (auto z : onE) top = std::max(top, log_abs_s(s, z));
  for (auto z : onF) {
    const double v = log_abs_s(s, z);
    if (!std::isnan(v)) bottom = std::min(bottom, v);
  }
  return std::exp(top - bottom);
}

double error_certificate(const ShiftSet& s, const BoundaryQuadrature& qE, const BoundaryQuadrature& qF) {
  return error_certificate(s, qE.nodes, qF.nodes);
}

ShiftSet faber_shifts(const FaberContext& ctx, int k, int samples) {
  if (k != ctx.degree()) throw InvalidInput("faber_shifts: context degree differs from k");
  if (samples < 4 * (k + 1)) throw InvalidInput("faber_shifts: too few samples");
  ShiftSet s;
  s.kind = ShiftKind::faber;
  if (k == 0) return s;
  const Region& E = ctx.map().E();
  const Region& F = ctx.map().F();
  auto fit_on = [&](const Region& r) {
    std::vector<cplx> z(samples), f(samples);
    for (int j = 0; j < samples; ++j) {
      z[j] = r.point_at(double(j) / samples);
      f[j] = eval_rn(ctx, z[j]);
    }
    double fmax = 0;
    for (auto v : f) fmax = std::max(fmax, std::abs(v));
    auto fit = aaa_fit(z, f, 1e-12, 2 * k + 2);
    if (!(fit.residual <= 1e-6 * fmax)) {
      std::ostringstream os;
      os << "shifts uncertified: AAA relative residual " << fit.residual / fmax;
      throw NumericalFailure(os.str());
    }
    return poles_zeros(fit);
  };
  s.kappa = nearest_k(fit_on(E).zeros, E, k, "zeros", s.diagnostics);
  s.tau = nearest_k(fit_on(F).poles, F, k, "poles", s.diagnostics);
  return s;
}

ShiftSet fejer_shifts(const ConformalMap& map, int k) {
  if (k < 0) throw InvalidInput("fejer_shifts: k must be non-negative");
  ShiftSet s;
  s.kind = ShiftKind::fejer;
  if (k == 0) return s;
  const Region& E = map.E();
  const Region& F = map.F();
  bool mirrored = true;
  for (int j = 0; j < 64 && mirrored; ++j)
    mirrored = F.distance_to_boundary(-std::conj(E.point_at(j / 64.0))) <= 1e-9 * F.diameter();
  const double h = map.h();
  for (int j = 0; j < k; ++j) {
    const cplx w = std::polar(1.0, 2 * std::numbers::pi * j / k);
    s.kappa.push_back(map.psi_boundary(w));
    s.tau.push_back(mirrored ? -std::conj(s.kappa.back()) : map.psi_boundary(h * w));
  }
  if (mirrored) s.diagnostics.push_back("mirror-symmetric pair: tau = -conj(kappa)");
  return s;
}

ShiftSet leja_shifts(const BoundaryQuadrature& qE, const BoundaryQuadrature& qF, int k) {
  if (qE.size() < 500 || qF.size() < 500) throw InvalidInput("leja_shifts: at least 500 samples per set");
  if (k < 0) throw InvalidInput("leja_shifts: k must be non-negative");
  ShiftSet s;
  s.kind = ShiftKind::leja;
  std::vector<double> lE(qE.size(), 0.0), lF(qF.size(), 0.0);
  for (int j = 0; j < k; ++j) {
    std::size_t iE = 0;
    for (std::size_t i = 1; i < lE.size(); ++i)
      if (lE[i] > lE[iE]) iE = i;
    const cplx kappa = qE.nodes[iE];
    std::size_t iF = 0;
    double best = inf;
    for (std::size_t i = 0; i < lF.size(); ++i) {
      const double v = lF[i] + std::log(std::abs(qF.nodes[i] - kappa));
      if (v < best) best = v, iF = i;
    }
    const cplx tau = qF.nodes[iF];
    for (std::size_t i = 0; i < lE.size(); ++i)
      lE[i] += std::log(std::abs(qE.nodes[i] - kappa)) - std::log(std::abs(qE.nodes[i] - tau));
    for (std::size_t i = 0; i < lF.size(); ++i)
      lF[i] += std::log(std::abs(qF.nodes[i] - kappa)) - std::log(std::abs(qF.nodes[i] - tau));
    s.kappa.push_back(kappa);
    s.tau.push_back(tau);
  }
  return s;
}

}  // namespace zolo

#include "zolo/conformal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "zolo/lstsq.hpp"

namespace zolo {

namespace {

constexpr double pi = std::numbers::pi;

bool strictly_inside(const Region& r, cplx z) {
  if (r.distance_to_boundary(z) <= 1e-12 * r.diameter()) return false;
  return r.contains(z);
}

double wrap_pi(double a) { return std::remainder(a, 2 * pi); }

}  // namespace

cplx ConformalMap::phi(cplx z) const {
  if (strictly_inside(E_, z) || strictly_inside(F_, z))
    throw InvalidInput("outside domain of Phi");
  return evaluate(z);
}

// ---------------------------------------------------------------- Mobius

MobiusMap::MobiusMap(Region E, Region F, cplx a, cplx b, cplx c, cplx d, double h)
    : ConformalMap(std::move(E), std::move(F)), a_(a), b_(b), c_(c), d_(d), h_(h), residual_(0) {
  if (std::abs(a * d - b * c) == 0.0) throw InvalidInput("mobius map is degenerate");
  if (!(h > 1)) throw InvalidInput("mobius map modulus must exceed 1");
  for (int j = 0; j < 256; ++j) {
    const double t = j / 256.0;
    residual_ = std::max(residual_, std::abs(std::abs(evaluate(E_.point_at(t))) - 1.0));
    residual_ = std::max(residual_, std::abs(std::abs(evaluate(F_.point_at(t))) / h_ - 1.0));
  }
}

cplx MobiusMap::psi_boundary(cplx w) const {
  const double r = std::abs(w);
  if (std::abs(r - 1.0) > 1e-10 && std::abs(r / h_ - 1.0) > 1e-10)
    throw InvalidInput("psi_boundary: |w| must equal 1 or h");
  return inverse(w);
}

MobiusMap mobius_two_disks(const Region& E, const Region& F) {
  if (E.kind() != RegionKind::disk || F.kind() != RegionKind::disk || E.is_complement() ||
      F.is_complement())
    throw InvalidInput("mobius_two_disks needs two bounded disks");
  const cplx cE = E.center(), cF = F.center();
  const double rE = E.radius(), rF = F.radius();
  const double dist = std::abs(cF - cE);
  if (!(dist > rE + rF)) throw InvalidInput("not disjoint");
  const cplx u = (cF - cE) / dist;
  // common inverse points cE + s u, cE + t u with s t = rE^2 and (s - dist)(t - dist) = rF^2
  const double S = (dist * dist + rE * rE - rF * rF) / dist;
  const double disc = S * S - 4 * rE * rE;
  const double s = 2 * rE * rE / (S + std::sqrt(disc));
  const double t = rE * rE / s;
  const cplx p = cE + s * u, q = cE + t * u;
  const double rho1 = (rE - s) / (t - rE);           // |z - p| / |z - q| on dE
  const double rho2 = (dist + rF - s) / (dist + rF - t);  // same ratio on dF, at cF + rF u
  const double K = 1.0 / rho1;
  return MobiusMap(E, F, K, -K * p, 1.0, -q, rho2 / rho1);
}

// ---------------------------------------------------------------- annulus map

namespace {

// Sum over k = 1..d of a_k q_k(u), with q_0 = 1 and
// h_k[k] q_k = u q_{k-1} - sum_{j<k} h_k[j] q_j (the recurrence built on the samples).
cplx arnoldi_sum(const std::vector<std::vector<cplx>>& hess, const std::vector<cplx>& a, cplx u) {
  const std::size_t d = a.size();
  thread_local std::vector<cplx> q;
  q.resize(d + 1);
  q[0] = 1;
  cplx s = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    const auto& hk = hess[k - 1];
    cplx v = u * q[k - 1];
    for (std::size_t j = 0; j < k; ++j) v -= hk[j] * q[j];
    q[k] = v / hk[k];
    s += a[k - 1] * q[k];
  }
  return s;
}

cplx g_data(const AnnulusMap::Data& d, cplx uE, cplx vF, cplx z, bool at_inf) {
  cplx g = d.c0;
  g += arnoldi_sum(d.hessE, d.laurentE, uE);
  g += arnoldi_sum(d.hessF, d.laurentF, vF);
  if (!at_inf)
    for (const auto& p : d.poles) g += p.coeff * p.scale / (z - p.location);
  return g;
}

cplx log_phi_data(const AnnulusMap::Data& d, cplx z) {
  const bool a1 = d.variant == Variant::A1;
  const cplx lead = a1 ? std::log((z - d.zE) / (z - d.zF)) : std::log(z - d.zE);
  const cplx uE = d.rhoE / (z - d.zE);
  const cplx vF = a1 ? d.rhoF / (z - d.zF) : (z - d.zE) / d.rhoF;
  return lead + g_data(d, uE, vF, z, false);
}

}  // namespace

AnnulusMap::AnnulusMap(Region E, Region F, Data data)
    : ConformalMap(std::move(E), std::move(F)), d_(std::move(data)) {
  corrE_ = build_correspondence(true);
  corrF_ = build_correspondence(false);
}

cplx AnnulusMap::log_phi(cplx z) const { return log_phi_data(d_, z); }

cplx AnnulusMap::at_infinity() const {
  if (d_.variant != Variant::A1) throw InvalidInput("Phi(infinity) is only defined in case A1");
  return std::exp(g_data(d_, 0.0, 0.0, 0.0, true));
}

cplx AnnulusMap::boundary_point(bool onE, double u) const {
  // Phi winds once positively along dE counterclockwise, and along dF against its orientation
  return onE ? E_.point_at(u) : F_.point_at(1.0 - u);
}

AnnulusMap::Correspondence AnnulusMap::build_correspondence(bool onE) const {
  const int m = 4096;
  Correspondence c;
  c.t.resize(m + 1);
  c.theta.resize(m + 1);
  cplx prev = 0;
  for (int j = 0; j <= m; ++j) {
    const double u = double(j) / m;
    const cplx w = evaluate(boundary_point(onE, u));
    c.t[j] = u;
    if (j == 0) {
      c.theta[0] = std::arg(w);
    } else {
      const double step = std::arg(w / prev);
      if (!(step > 0)) {
        c.t.clear();  // marks the correspondence as unusable
        return c;
      }
      c.theta[j] = c.theta[j - 1] + step;
    }
    prev = w;
  }
  if (std::abs(c.theta[m] - c.theta[0] - 2 * pi) > 1e-6) c.t.clear();
  return c;
}

cplx AnnulusMap::psi_boundary(cplx w) const {
  const double r = std::abs(w);
  bool onE;
  if (std::abs(r - 1.0) <= 1e-10)
    onE = true;
  else if (std::abs(r / d_.h - 1.0) <= 1e-10)
    onE = false;
  else
    throw InvalidInput("psi_boundary: |w| must equal 1 or h");
  const Correspondence& c = onE ? corrE_ : corrF_;
  if (c.t.empty())
    throw NumericalFailure("psi_boundary: boundary argument is not monotone; increase samples");
  const double target = c.theta[0] + std::fmod(std::fmod(std::arg(w) - c.theta[0], 2 * pi) + 2 * pi, 2 * pi);
  const std::size_t j =
      std::clamp<std::size_t>(std::upper_bound(c.theta.begin(), c.theta.end(), target) - c.theta.begin(), 1,
                              c.theta.size() - 1) - 1;
  auto f = [&](double u) { return wrap_pi(std::arg(evaluate(boundary_point(onE, u))) - std::arg(w)); };
  double lo = c.t[j], hi = c.t[j + 1];
  const double flo = f(lo), fhi = f(hi);
  if (flo == 0) return boundary_point(onE, lo);
  if (fhi == 0) return boundary_point(onE, hi);
  if (flo > 0 || fhi < 0) {
    // target sits at a bracket end up to rounding
    return boundary_point(onE, std::abs(flo) < std::abs(fhi) ? lo : hi);
  }
  std::uintmax_t iters = 200;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-15; };
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return boundary_point(onE, 0.5 * (a + b));
}

// ---------------------------------------------------------------- least-squares solve

namespace {

struct Stage {
  int degree, poles;
};

// Poles closer to a corner than the finest boundary panel are not constrained by the samples.
constexpr double kMinPoleDepth = 1e-12;

std::vector<PoleTerm> corner_poles(const Region& r, int per_corner, double taper) {
  std::vector<PoleTerm> out;
  if (!r.has_corners() || per_corner <= 0) return out;
  const auto v = r.oriented_vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = v[(i + n - 1) % n], b = v[i], c = v[(i + 1) % n];
    const cplx tin = (b - a) / std::abs(b - a), tout = (c - b) / std::abs(c - b);
    // Exterior angle alpha; the map behaves like (z - b)^(pi/alpha), analytic for integer exponents.
    const double alpha = pi + std::arg(tout / tin);
    const double expo = pi / alpha;
    if (std::abs(expo - std::round(expo)) < 1e-9) continue;
    const cplx bis = cplx(0, 1) * (tin + tout) / std::abs(tin + tout);
    const double L = std::min(std::abs(b - a), std::abs(c - b));
    const double sN = std::sqrt(double(per_corner));
    for (int k = 0; k < per_corner; ++k) {
      const double dist = 0.5 * L * std::exp(-taper * (sN - std::sqrt(double(per_corner - k))));
      if (dist < kMinPoleDepth * L) break;
      out.push_back({b + dist * bis, dist, 0.0});
    }
  }
  return out;
}

std::vector<cplx> midpoints(const Region& r, const BoundaryQuadrature& q) {
  std::vector<cplx> out;
  out.reserve(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    const double a = q.params[j];
    const double b = j + 1 < q.size() ? q.params[j + 1] : q.params[0] + 1.0;
    out.push_back(r.point_at(0.5 * (a + b)));
  }
  return out;
}

double measure_residual(const AnnulusMap::Data& d, const std::vector<cplx>& vE,
                        const std::vector<cplx>& vF) {
  double res = 0;
  const double L = std::log(d.h);
  for (auto z : vE) res = std::max(res, std::abs(std::expm1(log_phi_data(d, z).real())));
  for (auto z : vF) res = std::max(res, std::abs(std::expm1(log_phi_data(d, z).real() - L)));
  return res;
}

struct Fit {
  AnnulusMap::Data data;
  double residual = std::numeric_limits<double>::infinity();
};

// Weighted Arnoldi orthonormalisation of 1, u, u^2, ... on the samples. Returns the basis
// columns 0..d and the recurrence coefficients used by arnoldi_sum.
Eigen::MatrixXcd arnoldi(const Eigen::VectorXcd& u, const Eigen::VectorXd& w2, int d,
                         std::vector<std::vector<cplx>>& hess) {
  const Eigen::Index M = u.size();
  const Eigen::VectorXcd w = w2.cast<cplx>() / w2.sum();
  Eigen::MatrixXcd Q(M, d + 1);
  Q.col(0).setOnes();
  hess.assign(d, {});
  for (int k = 1; k <= d; ++k) {
    Eigen::VectorXcd v = u.cwiseProduct(Q.col(k - 1));
    std::vector<cplx> hk(k + 1, 0.0);
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < k; ++j) {
        const cplx c = Q.col(j).dot(w.cwiseProduct(v));
        hk[j] += c;
        v -= c * Q.col(j);
      }
    const double nrm = std::sqrt((w2.cwiseProduct(v.cwiseAbs2())).sum() / w2.sum());
    if (!(nrm > 0)) throw NumericalFailure("annulus map: degenerate Arnoldi basis");
    hk[k] = nrm;
    Q.col(k) = v / nrm;
    hess[k - 1] = std::move(hk);
  }
  return Q;
}

Fit fit_stage(const Region& E, const Region& F, const AnnulusMap::Data& base, const Stage& st,
              const SolverConfig& cfg) {
  const bool a1 = base.variant == Variant::A1;
  std::vector<PoleTerm> poles = corner_poles(E, st.poles, cfg.taper);
  for (auto& p : corner_poles(F, st.poles, cfg.taper)) poles.push_back(p);
  const int ncols = 2 + 4 * st.degree + 2 * int(poles.size());

  // Laurent terms of degree d oscillate d times per turn; keep several nodes per oscillation.
  int nsamp = std::max(cfg.n_samples, 8 * st.degree);
  BoundaryQuadrature qE, qF;
  for (int tries = 0; tries < 6; ++tries) {
    qE = boundary_samples(E, nsamp);
    qF = boundary_samples(F, nsamp);
    if (int(qE.size() + qF.size()) >= 2 * ncols) break;
    nsamp *= 2;
  }
  const int nE = int(qE.size()), nF = int(qF.size()), nrows = nE + nF;

  Eigen::VectorXcd uE(nrows), vF(nrows);
  Eigen::VectorXd w2(nrows);
  auto node = [&](int i) { return i >= nE ? qF.nodes[i - nE] : qE.nodes[i]; };
  for (int i = 0; i < nrows; ++i) {
    const cplx z = node(i);
    uE(i) = base.rhoE / (z - base.zE);
    vF(i) = a1 ? base.rhoF / (z - base.zF) : (z - base.zE) / base.rhoF;
    w2(i) = std::abs(i >= nE ? qF.weights[i - nE] : qE.weights[i]);
  }
  AnnulusMap::Data data = base;
  const Eigen::MatrixXcd QE = arnoldi(uE, w2, st.degree, data.hessE);
  const Eigen::MatrixXcd QF = arnoldi(vF, w2, st.degree, data.hessF);

  Eigen::MatrixXd A(nrows, ncols);
  Eigen::VectorXd rhs(nrows);
  for (int i = 0; i < nrows; ++i) {
    const bool onF = i >= nE;
    const cplx z = node(i);
    const double wt = std::sqrt(w2(i));
    const double lead = a1 ? std::log(std::abs(z - base.zE)) - std::log(std::abs(z - base.zF))
                           : std::log(std::abs(z - base.zE));
    rhs(i) = -lead * wt;
    int c = 0;
    A(i, c++) = wt;
    A(i, c++) = onF ? -wt : 0.0;
    for (const auto* Q : {&QE, &QF})
      for (int k = 1; k <= st.degree; ++k) {
        A(i, c++) = (*Q)(i, k).real() * wt;
        A(i, c++) = -(*Q)(i, k).imag() * wt;
      }
    for (const auto& p : poles) {
      const cplx b = p.scale / (z - p.location);
      A(i, c++) = b.real() * wt;
      A(i, c++) = -b.imag() * wt;
    }
  }
  Eigen::VectorXd cs(ncols);
  for (int j = 0; j < ncols; ++j) {
    cs(j) = A.col(j).cwiseAbs().maxCoeff();
    if (cs(j) == 0) cs(j) = 1;
    A.col(j) /= cs(j);
  }
  Eigen::VectorXd x = lstsq(A, rhs).cwiseQuotient(cs);

  Fit fit;
  fit.data = std::move(data);
  int c = 0;
  fit.data.c0 = x(c++);
  const double L = x(c++);
  fit.data.h = std::exp(L);
  fit.data.laurentE.resize(st.degree);
  fit.data.laurentF.resize(st.degree);
  for (int k = 0; k < st.degree; ++k, c += 2) fit.data.laurentE[k] = {x(c), x(c + 1)};
  for (int k = 0; k < st.degree; ++k, c += 2) fit.data.laurentF[k] = {x(c), x(c + 1)};
  for (auto& p : poles) {
    p.coeff = {x(c), x(c + 1)};
    c += 2;
  }
  fit.data.poles = std::move(poles);
  if (!(fit.data.h > 1) || !std::isfinite(fit.data.h)) return fit;
  fit.residual = measure_residual(fit.data, midpoints(E, qE), midpoints(F, qF));
  fit.data.residual = fit.residual;
  return fit;
}

}  // namespace

AnnulusMap solve_annulus_map(const Region& E, const Region& F, const SolverConfig& cfg) {
  if (!(cfg.tolerance > 0) || cfg.max_degree < 1 || cfg.n_samples < 16)
    throw InvalidInput("solver configuration out of range");
  check_disjoint(E, F);
  AnnulusMap::Data base;
  base.variant = F.is_complement() ? Variant::A2 : Variant::A1;
  base.zE = E.anchor();
  base.zF = F.anchor();
  const auto qE = boundary_samples(E, cfg.n_samples), qF = boundary_samples(F, cfg.n_samples);
  double rhoE = std::numeric_limits<double>::infinity(), rhoF = rhoE, rmax = 0;
  for (const auto* q : {&qE, &qF})
    for (auto z : q->nodes) {
      rhoE = std::min(rhoE, std::abs(z - base.zE));
      rhoF = std::min(rhoF, std::abs(z - base.zF));
      rmax = std::max(rmax, std::abs(z - base.zE));
    }
  base.rhoE = rhoE;
  base.rhoF = base.variant == Variant::A1 ? rhoF : rmax;

  std::vector<Stage> ladder;
  if (E.has_corners() || F.has_corners()) {
    for (Stage s : {Stage{8, 16}, Stage{16, 24}, Stage{32, 40}, Stage{48, 60}, Stage{64, 80},
                    Stage{96, 80}, Stage{128, 80}}) {
      if (s.degree > cfg.max_degree) break;
      s.poles = std::min(s.poles, cfg.max_poles);
      ladder.push_back(s);
    }
  } else {
    for (int d = 8; d <= cfg.max_degree; d *= 2) ladder.push_back({d, 0});
  }
  if (ladder.empty() || ladder.back().degree < cfg.max_degree)
    ladder.push_back({cfg.max_degree, (E.has_corners() || F.has_corners()) ? cfg.max_poles : 0});

  Fit best;
  for (const auto& st : ladder) {
    Fit f = fit_stage(E, F, base, st, cfg);
    if (f.residual < best.residual) best = std::move(f);
    if (best.residual <= cfg.tolerance) return AnnulusMap(E, F, best.data);
  }
  std::ostringstream os;
  os << "map not resolved: residual " << best.residual << " exceeds tolerance " << cfg.tolerance;
  throw MapNotResolved(os.str(), best.residual);
}

std::shared_ptr<const ConformalMap> solve_map(const Region& E, const Region& F, const SolverConfig& cfg) {
  const bool disks = E.kind() == RegionKind::disk && F.kind() == RegionKind::disk;
  if (disks && !E.is_complement() && !F.is_complement())
    return std::make_shared<MobiusMap>(mobius_two_disks(E, F));
  return std::make_shared<AnnulusMap>(solve_annulus_map(E, F, cfg));
}

}  // namespace zolo

#include "zolo/faber.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <sstream>

namespace zolo {

namespace {

// Largest n * |log|Phi|| allowed on a filter contour; bounds cancellation by about e^4.
constexpr double kCancel = 4.0;

cplx phi_pow(const ConformalMap& m, cplx z, int n) { return std::exp(double(n) * m.log_phi(z)); }

const FilterContour& pick(const std::array<FilterContour, 2>& c, cplx z) {
  const double r0 = c[0].quad.distance(z) / c[0].offset;
  const double r1 = c[1].quad.distance(z) / c[1].offset;
  return r0 >= r1 ? c[0] : c[1];
}

cplx Rn_raw(const ConformalMap& m, int n, const std::array<FilterContour, 2>& gamma, cplx z) {
  const FilterContour& c = pick(gamma, z);
  if (c.quad.encloses(z)) return cauchy_stabilized(c.values, c.quad, z, Side::interior);
  return phi_pow(m, z, n) + cauchy_auto(c.values, c.quad, z, Side::exterior);
}

// Largest offset d <= d0 (halving) for which excess(node) <= kCancel on offset_boundary(r, d).
template <class Excess>
double choose_offset(const Region& r, double d0, Excess excess) {
  double d = d0;
  for (int it = 0; it < 40; ++it, d *= 0.5) {
    const auto q = offset_boundary(r, d, 1.5 * d);
    double worst = 0;
    for (auto z : q.nodes) worst = std::max(worst, excess(z));
    if (worst <= kCancel) return d;
  }
  throw NumericalFailure("Faber contour: cancellation cannot be controlled at this degree");
}

void check_domain(const Region& F, cplx z) {
  if (F.distance_to_boundary(z) > 1e-12 * F.diameter() && F.contains(z))
    throw InvalidInput("R_n undefined in F");
}

}  // namespace

FaberContext build_context(std::shared_ptr<const ConformalMap> map, int n, int nq) {
  if (!map) throw InvalidInput("build_context: missing map");
  if (n < 0) throw InvalidInput("build_context: degree must be non-negative");
  if (nq < 64) throw InvalidInput("build_context: at least 64 boundary samples are required");
  if (map->variant() != Variant::A1)
    throw InvalidInput("build_context: Faber rationals need two bounded sets");
  FaberContext c;
  c.map_ = map;
  c.n_ = n;
  c.nq_ = nq;
  const Region& E = map->E();
  const Region& F = map->F();
  c.quadE_ = boundary_samples(E, nq);
  c.quadF_ = boundary_samples(F, nq);

  double maxabs = 0;
  c.phiN_on_E_.reserve(c.quadE_.size());
  for (auto z : c.quadE_.nodes) {
    const cplx lp = map->log_phi(z);
    maxabs = std::max(maxabs, lp.real());
    c.phiN_on_E_.push_back(std::exp(double(n) * lp));
  }
  c.maxPhiNE_ = std::exp(double(n) * maxabs);
  if (std::expm1(maxabs) > 10 * std::max(map->residual(), 1e-13)) {
    std::ostringstream os;
    os << "map residual does not certify |Phi| <= 1 on dE: measured max |Phi| - 1 = " << std::expm1(maxabs);
    warn(os.str());
  }
  if (n == 0) {
    c.Rn_on_F_.assign(c.quadF_.size(), 1.0);
    return c;
  }

  const double L = std::log(map->h());
  const double d0 = std::min(boundary_gap(E, F), std::min(E.diameter(), F.diameter())) / 4;
  const double dE = choose_offset(E, d0, [&](cplx z) { return n * map->log_phi(z).real(); });
  for (int k = 0; k < 2; ++k) {
    FilterContour& g = c.gamma_[k];
    g.offset = dE / (k + 1);
    g.quad = offset_boundary(E, g.offset, 1.5 * g.offset);
    g.values.reserve(g.quad.size());
    for (auto z : g.quad.nodes) g.values.push_back(phi_pow(*map, z, n));
  }
  const double dF = choose_offset(F, d0, [&](cplx z) { return n * (L - map->log_phi(z).real()); });
  for (int k = 0; k < 2; ++k) {
    FilterContour& e = c.eta_[k];
    e.offset = dF / (k + 1);
    e.quad = offset_boundary(F, e.offset, 1.5 * e.offset);
    e.values.reserve(e.quad.size());
    for (auto z : e.quad.nodes) e.values.push_back(1.0 / Rn_raw(*map, n, c.gamma_, z));
  }

  c.Rn_on_F_.reserve(c.quadF_.size());
  for (auto z : c.quadF_.nodes) c.Rn_on_F_.push_back(Rn_raw(*map, n, c.gamma_, z));
  c.Rn_inf_ = std::pow(map->at_infinity(), n);
  c.maxRnE_ = boundary_max(E, 4 * nq, [&](cplx z) { return std::abs(Rn_raw(*map, n, c.gamma_, z)); }).value;
  return c;
}

FaberContext build_context(const MobiusMap& map, int n, int nq) {
  return build_context(std::make_shared<MobiusMap>(map), n, nq);
}

FaberContext build_context(const AnnulusMap& map, int n, int nq) {
  return build_context(std::make_shared<AnnulusMap>(map), n, nq);
}

cplx eval_Rn(const FaberContext& ctx, cplx z) {
  check_domain(ctx.map().F(), z);
  if (ctx.degree() == 0) return 1.0;
  return Rn_raw(ctx.map(), ctx.degree(), ctx.gamma(), z);
}

InvRn eval_inv_rn(const FaberContext& ctx, cplx z) {
  if (ctx.degree() == 0) return {1.0, false};
  const FilterContour& c = pick(ctx.eta(), z);
  if (c.quad.encloses(z)) return {cauchy_stabilized(c.values, c.quad, z, Side::interior), false};
  const cplx R = Rn_raw(ctx.map(), ctx.degree(), ctx.gamma(), z);
  if (std::abs(R) < 1e-14) return {0.0, true};
  return {1.0 / R + cauchy_auto(c.values, c.quad, z, Side::exterior), false};
}

cplx eval_rn(const FaberContext& ctx, cplx z) {
  if (ctx.degree() == 0) return 1.0;
  const FilterContour& c = pick(ctx.eta(), z);
  if (c.quad.encloses(z)) return 1.0 / cauchy_stabilized(c.values, c.quad, z, Side::interior);
  const cplx R = Rn_raw(ctx.map(), ctx.degree(), ctx.gamma(), z);
  return R / (1.0 + R * cauchy_auto(c.values, c.quad, z, Side::exterior));
}

BoundaryExtremum boundary_max(const Region& r, int samples, const std::function<double(cplx)>& f) {
  if (samples < 3) throw InvalidInput("boundary_max: too few samples");
  std::vector<double> vals(samples);
  int best = 0;
  for (int j = 0; j < samples; ++j) {
    vals[j] = f(r.point_at(double(j) / samples));
    if (vals[j] > vals[best]) best = j;
  }
  BoundaryExtremum out{vals[best], double(best) / samples, r.point_at(double(best) / samples)};
  auto wrap = [](double t) { return t - std::floor(t); };
  auto neg = [&](double t) { return -f(r.point_at(wrap(t))); };
  std::uintmax_t iters = 60;
  const auto [t, v] = boost::math::tools::brent_find_minima(neg, double(best - 1) / samples,
                                                            double(best + 1) / samples, 40, iters);
  if (-v > out.value) out = {-v, wrap(t), r.point_at(wrap(t))};
  return out;
}

double empirical_ratio(const FaberContext& ctx) {
  if (ctx.degree() == 0) return 1.0;
  const int m = 4 * ctx.samples();
  const double top = boundary_max(ctx.map().E(), m, [&](cplx z) { return std::abs(eval_rn(ctx, z)); }).value;
  const double inv =
      boundary_max(ctx.map().F(), m, [&](cplx z) { return std::abs(eval_inv_rn(ctx, z).value); }).value;
  return top * inv;
}

int count_zeros(const FaberContext& ctx) {
  const int n = ctx.degree();
  if (n == 0) return 0;
  const ConformalMap& m = ctx.map();
  const double gap = boundary_gap(m.E(), m.F());
  for (double d = 1.5 * ctx.gamma()[0].offset; d < 0.9 * gap; d *= 1.5) {
    BoundaryQuadrature G;
    try {
      G = offset_boundary(m.E(), d, d);
    } catch (const InvalidInput&) {
      break;
    }
    double panel = d;
    for (int refine = 0; refine < 6; ++refine) {
      // Rouche with measured values: |R_n - Phi^n| < |Phi^n| on the curve, with a margin for
      // the gaps between nodes.
      std::vector<cplx> vals;
      vals.reserve(G.size());
      double worst = 0;
      for (auto z : G.nodes) {
        const cplx r = Rn_raw(m, n, ctx.gamma(), z), p = phi_pow(m, z, n);
        vals.push_back(r);
        worst = std::max(worst, std::abs(r - p) / std::abs(p));
      }
      if (!(worst < 0.9)) break;
      try {
        return phase_winding(vals, 0.0, 1.0);
      } catch (const NumericalFailure&) {
        panel *= 0.5;
        G = offset_boundary(m.E(), d, panel);
      }
    }
  }
  throw NumericalFailure("zero count not certified at this n");
}

}  // namespace zolo

#include "zolo/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace zolo {

namespace {

constexpr cplx two_pi_i{0.0, 2.0 * std::numbers::pi};

template <int N>
UnitRule make_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pts.emplace_back(a[i], w[i]);
    if (a[i] != 0.0) pts.emplace_back(-a[i], w[i]);
  }
  std::sort(pts.begin(), pts.end());
  UnitRule r;
  for (auto [x, wx] : pts) {
    r.x.push_back(0.5 * (x + 1.0));
    r.w.push_back(0.5 * wx);
  }
  return r;
}

void check_sizes(const std::vector<cplx>& values, const BoundaryQuadrature& q) {
  if (values.size() != q.size())
    throw InvalidInput("cauchy transform: values and quadrature nodes differ in size");
  if (q.size() < 2) throw InvalidInput("cauchy transform: empty quadrature");
}

// Moves z off a coincident node by one epsilon step towards the requested side.
cplx separate(const BoundaryQuadrature& q, cplx z, Side side) {
  const double diam = std::max(q.diameter(), 1e-300);
  const std::size_t k = q.nearest(z);
  if (std::abs(q.nodes[k] - z) > std::numeric_limits<double>::epsilon() * diam) return z;
  cplx dir = q.weights[k] / std::abs(q.weights[k]);
  dir *= (side == Side::interior) ? cplx(0, 1) : cplx(0, -1);
  std::ostringstream os;
  os << "evaluation point " << z << " coincides with a quadrature node; perturbed";
  warn(os.str());
  return q.nodes[k] + 4.0 * std::numeric_limits<double>::epsilon() * diam * dir;
}

struct Sums {
  cplx num, den;
};

Sums kernel_sums(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z) {
  cplx num = 0, den = 0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const cplx d = q.nodes[j] - z;
    const cplx k = q.weights[j] * std::conj(d) / std::norm(d);
    num += values[j] * k;
    den += k;
  }
  return {num, den};
}

// Newton form through up to five consecutive nodes centred on node k.
struct Local {
  std::vector<cplx> x, c;
  cplx operator()(cplx z) const {
    cplx v = c.back();
    for (std::size_t m = c.size() - 1; m-- > 0;) v = v * (z - x[m]) + c[m];
    return v;
  }
};

Local local_interpolant(const std::vector<cplx>& values, const BoundaryQuadrature& q, std::size_t k) {
  const std::size_t n = q.size();
  double fmax = 0;
  for (auto v : values) fmax = std::max(fmax, std::abs(v));
  // Lower the degree until p stays within 1e3 max|f| on the nodes, so that the subtraction
  // costs at most three digits; degree 0 is the plain nearest-value correction.
  for (int d = int(std::min<std::size_t>(4, n - 1)); d >= 0; --d) {
    Local p;
    for (int m = 0; m <= d; ++m) {
      const std::size_t j = (k + n + std::size_t(m - d / 2)) % n;
      p.x.push_back(q.nodes[j]);
      p.c.push_back(values[j]);
    }
    for (int m = 1; m <= d; ++m)
      for (int i = d; i >= m; --i) p.c[i] = (p.c[i] - p.c[i - 1]) / (p.x[i] - p.x[i - m]);
    if (d == 0) return p;
    double pmax = 0;
    for (auto z : q.nodes) pmax = std::max(pmax, std::abs(p(z)));
    if (std::isfinite(pmax) && pmax <= 1e3 * std::max(fmax, 1e-300)) return p;
  }
  return {};
}

}  // namespace

double BoundaryQuadrature::length() const {
  double s = 0;
  for (auto w : weights) s += std::abs(w);
  return s;
}

double BoundaryQuadrature::diameter() const {
  if (nodes.empty()) return 0;
  double x0 = nodes[0].real(), x1 = x0, y0 = nodes[0].imag(), y1 = y0;
  for (auto z : nodes) {
    x0 = std::min(x0, z.real());
    x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag());
    y1 = std::max(y1, z.imag());
  }
  return std::hypot(x1 - x0, y1 - y0);
}

std::size_t BoundaryQuadrature::nearest(cplx z) const {
  std::size_t best = 0;
  double bd = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double d = std::norm(nodes[j] - z);
    if (d < bd) {
      bd = d;
      best = j;
    }
  }
  return best;
}

double BoundaryQuadrature::distance(cplx z) const { return std::abs(nodes[nearest(z)] - z); }

bool BoundaryQuadrature::encloses(cplx z) const {
  bool inside = false;
  const std::size_t n = nodes.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const cplx a = nodes[i], b = nodes[j];
    if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
      const double x = a.real() + (z.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (z.real() < x) inside = !inside;
    }
  }
  return inside;
}

cplx cauchy_plus(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z) {
  check_sizes(values, q);
  const Sums s = kernel_sums(values, q, z);
  if (std::abs(s.den / two_pi_i - 1.0) > 0.5)
    throw InvalidInput("cauchy_plus: evaluation point is not inside the contour");
  return s.num / two_pi_i;
}

cplx cauchy_minus(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z) {
  check_sizes(values, q);
  const Sums s = kernel_sums(values, q, z);
  if (std::abs(s.den / two_pi_i) > 0.5)
    throw InvalidInput("cauchy_minus: evaluation point is not outside the contour");
  return s.num / two_pi_i;
}

cplx cauchy_stabilized(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z,
                       Side side) {
  check_sizes(values, q);
  z = separate(q, z, side);
  // p interpolates f at the nodes around the nearest one. Its transform is known exactly
  // (p(z) inside, 0 outside), so only f - p, which is small near z, goes through the rule.
  const Local p = local_interpolant(values, q, q.nearest(z));
  std::vector<cplx> g(values.size());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = values[j] - p(q.nodes[j]);
  const Sums s = kernel_sums(g, q, z);
  return (side == Side::interior ? p(z) : cplx(0)) + s.num / two_pi_i;
}

cplx cauchy_auto(const std::vector<cplx>& values, const BoundaryQuadrature& q, cplx z,
                 Side side) {
  if (q.distance(z) > 0.05 * q.diameter())
    return side == Side::interior ? cauchy_plus(values, q, z) : cauchy_minus(values, q, z);
  return cauchy_stabilized(values, q, z, side);
}

int winding_number(const BoundaryQuadrature& q, cplx z) {
  cplx s = 0;
  for (std::size_t j = 0; j < q.size(); ++j) s += q.weights[j] / (q.nodes[j] - z);
  const cplx w = s / two_pi_i;
  const double r = std::round(w.real());
  if (std::abs(w - r) > 1e-6) {
    std::ostringstream os;
    os << "insufficient quadrature: winding sum " << w << " is not an integer";
    throw NumericalFailure(os.str());
  }
  return static_cast<int>(r);
}

int phase_winding(const std::vector<cplx>& curve, cplx about, double maxstep) {
  if (curve.size() < 3) throw InvalidInput("phase_winding: need at least three samples");
  double total = 0;
  for (std::size_t j = 0; j < curve.size(); ++j) {
    const cplx a = curve[j] - about, b = curve[(j + 1) % curve.size()] - about;
    if (a == 0.0 || b == 0.0) throw NumericalFailure("phase_winding: curve passes through the point");
    const double step = std::arg(b / a);
    if (std::abs(step) > maxstep) throw NumericalFailure("phase_winding: curve under-resolved");
    total += step;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

const UnitRule& gauss_legendre(int order) {
  static const UnitRule r8 = make_rule<8>();
  static const UnitRule r16 = make_rule<16>();
  if (order == 8) return r8;
  if (order == 16) return r16;
  throw InvalidInput("gauss_legendre: only orders 8 and 16 are available");
}

}  // namespace zolo

#include "zolo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace zolo {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kDense = 4096;

double wrap01(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double segment_distance(cplx z, cplx a, cplx b) {
  const cplx ab = b - a;
  const double l2 = std::norm(ab);
  double s = l2 > 0 ? std::clamp(((z - a) * std::conj(ab)).real() / l2, 0.0, 1.0) : 0.0;
  return std::abs(z - (a + s * ab));
}

bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
  const double d1 = cross(b - a, c - a), d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c), d4 = cross(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

bool polyline_inside(const std::vector<cplx>& pts, cplx z) {
  bool inside = false;
  const std::size_t n = pts.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const cplx a = pts[i], b = pts[j];
    if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
      const double x = a.real() + (z.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (z.real() < x) inside = !inside;
    }
  }
  return inside;
}

double polyline_distance(const std::vector<cplx>& pts, cplx z) {
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    d = std::min(d, segment_distance(z, pts[i], pts[(i + 1) % pts.size()]));
  return d;
}

double signed_area(const std::vector<cplx>& pts) {
  double a = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) a += cross(pts[i], pts[(i + 1) % pts.size()]);
  return 0.5 * a;
}

void check_simple(const std::vector<cplx>& pts, const char* what) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n]))
        throw InvalidInput(std::string(what) + " boundary is not a simple curve");
    }
}

// Appends n_panels Gauss-Legendre panels on a parameterised piece p(s), s in [0,1].
template <class P, class D>
void add_panels(BoundaryQuadrature& q, const UnitRule& rule, const std::vector<double>& breaks,
                P point, D deriv, double t0, double t1) {
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double a = breaks[k], b = breaks[k + 1];
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
      const double s = a + (b - a) * rule.x[j];
      q.nodes.push_back(point(s));
      q.weights.push_back(deriv(s) * ((b - a) * rule.w[j]));
      q.params.push_back(t0 + (t1 - t0) * s);
    }
  }
}

std::vector<double> uniform_breaks(int m) {
  std::vector<double> b(m + 1);
  for (int i = 0; i <= m; ++i) b[i] = double(i) / m;
  return b;
}

std::vector<double> graded_breaks(int middle) {
  std::vector<double> b{0.0};
  for (int e = 40; e >= 4; e -= 2) b.push_back(std::ldexp(1.0, -e));
  const double lo = std::ldexp(1.0, -4), hi = 1.0 - lo;
  for (int i = 1; i < middle; ++i) b.push_back(lo + (hi - lo) * i / middle);
  for (int e = 4; e <= 40; e += 2) b.push_back(1.0 - std::ldexp(1.0, -e));
  b.push_back(1.0);
  return b;
}

}  // namespace

// ---------------------------------------------------------------- construction

Region Region::disk(cplx center, double radius) {
  if (!(radius > 0) || !std::isfinite(radius)) throw InvalidInput("disk radius must be positive");
  Region r;
  r.kind_ = RegionKind::disk;
  r.center_ = center;
  r.radius_ = radius;
  r.finish();
  return r;
}

Region Region::rectangle(double re_lo, double re_hi, double im_lo, double im_hi) {
  if (!(re_hi > re_lo) || !(im_hi > im_lo))
    throw InvalidInput("rectangle intervals must have positive length");
  Region r = polygon({{re_lo, im_lo}, {re_hi, im_lo}, {re_hi, im_hi}, {re_lo, im_hi}});
  r.kind_ = RegionKind::rectangle;
  return r;
}

Region Region::polygon(std::vector<cplx> v) {
  if (v.size() < 3) throw InvalidInput("polygon needs at least three vertices");
  double scale = 0;
  for (auto z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput("polygon vertex is not finite");
    scale = std::max(scale, std::abs(z - v[0]));
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = v[(i + n - 1) % n], b = v[i], c = v[(i + 1) % n];
    if (std::abs(c - b) <= 1e-14 * scale) throw InvalidInput("polygon vertices must be distinct");
    if (std::abs(cross(b - a, c - b)) <= 1e-12 * std::abs(b - a) * std::abs(c - b))
      throw InvalidInput("polygon has collinear consecutive vertices");
  }
  if (signed_area(v) <= 0) throw InvalidInput("polygon vertices must be counterclockwise");
  check_simple(v, "polygon");
  Region r;
  r.kind_ = RegionKind::polygon;
  r.vertices_ = std::move(v);
  r.finish();
  return r;
}

Region Region::curve(std::vector<FourierTerm> terms) {
  if (terms.empty()) throw InvalidInput("curve needs Fourier coefficients");
  Region r;
  r.kind_ = RegionKind::curve;
  r.terms_ = std::move(terms);
  r.finish();
  return r;
}

Region Region::curve_from_samples(const std::vector<cplx>& s) {
  const int n = static_cast<int>(s.size());
  if (n < 8) throw InvalidInput("curve sample table needs at least 8 points");
  std::vector<FourierTerm> terms;
  double cmax = 0;
  std::vector<std::pair<int, cplx>> all;
  for (int k = -(n - 1) / 2; k <= n / 2; ++k) {
    cplx c = 0;
    for (int j = 0; j < n; ++j) c += s[j] * std::polar(1.0, -2.0 * pi * k * j / n);
    c /= double(n);
    if (2 * k == n) c *= 0.5;  // split the Nyquist term symmetrically
    all.emplace_back(k, c);
    cmax = std::max(cmax, std::abs(c));
  }
  for (auto [k, c] : all)
    if (std::abs(c) > 1e-15 * cmax) terms.push_back({k, c});
  if (n % 2 == 0) {
    // mirror half of the Nyquist coefficient at -n/2 so the interpolant stays real-symmetric
    const auto it = std::find_if(terms.begin(), terms.end(), [n](const FourierTerm& t) { return 2 * t.k == n; });
    if (it != terms.end()) terms.push_back({-it->k, it->c});
  }
  return curve(std::move(terms));
}

void Region::finish() {
  switch (kind_) {
    case RegionKind::disk:
      perimeter_ = 2 * pi * radius_;
      break;
    case RegionKind::rectangle:
    case RegionKind::polygon: {
      const std::size_t n = vertices_.size();
      cumlen_.assign(n + 1, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        cumlen_[i + 1] = cumlen_[i] + std::abs(vertices_[(i + 1) % n] - vertices_[i]);
      perimeter_ = cumlen_[n];
      for (auto& c : cumlen_) c /= perimeter_;
      break;
    }
    case RegionKind::curve: {
      dense_.resize(kDense);
      double len = 0;
      double vmax = 0, vmin = std::numeric_limits<double>::infinity();
      for (int j = 0; j < kDense; ++j) {
        dense_[j] = base_point(double(j) / kDense);
        const double sp = std::abs(base_tangent(double(j) / kDense));
        len += sp / kDense;
        vmax = std::max(vmax, sp);
        vmin = std::min(vmin, sp);
      }
      if (!(vmax > 0) || !std::isfinite(len)) throw InvalidInput("curve is degenerate");
      perimeter_ = len;
      if (signed_area(dense_) <= 0) throw InvalidInput("curve must be counterclockwise");
      std::vector<cplx> coarse;
      for (int j = 0; j < kDense; j += 8) coarse.push_back(dense_[j]);
      check_simple(coarse, "curve");
      break;
    }
  }
}

Region Region::transformed(cplx a, cplx b) const {
  if (a == 0.0) throw InvalidInput("transform scale must be nonzero");
  Region r = *this;
  switch (kind_) {
    case RegionKind::disk:
      r.center_ = a * center_ + b;
      r.radius_ = std::abs(a) * radius_;
      break;
    case RegionKind::rectangle:
    case RegionKind::polygon:
      for (auto& v : r.vertices_) v = a * v + b;
      break;
    case RegionKind::curve: {
      bool has0 = false;
      for (auto& t : r.terms_) {
        t.c *= a;
        if (t.k == 0) {
          t.c += b;
          has0 = true;
        }
      }
      if (!has0) r.terms_.push_back({0, b});
      break;
    }
  }
  r.finish();
  return r;
}

Region Region::complement() const {
  Region r = *this;
  r.complement_ = !complement_;
  return r;
}

std::vector<cplx> Region::oriented_vertices() const {
  if (!complement_) return vertices_;
  std::vector<cplx> v{vertices_[0]};
  for (std::size_t i = vertices_.size() - 1; i >= 1; --i) v.push_back(vertices_[i]);
  return v;
}

// ---------------------------------------------------------------- boundary access

cplx Region::base_point(double s) const {
  switch (kind_) {
    case RegionKind::disk:
      return center_ + std::polar(radius_, 2 * pi * s);
    case RegionKind::rectangle:
    case RegionKind::polygon: {
      const std::size_t n = vertices_.size();
      std::size_t i = std::upper_bound(cumlen_.begin(), cumlen_.end(), s) - cumlen_.begin();
      i = std::clamp<std::size_t>(i, 1, n) - 1;
      const double f = (s - cumlen_[i]) / (cumlen_[i + 1] - cumlen_[i]);
      return vertices_[i] + f * (vertices_[(i + 1) % n] - vertices_[i]);
    }
    case RegionKind::curve: {
      cplx z = 0;
      for (const auto& t : terms_) z += t.c * std::polar(1.0, 2 * pi * t.k * s);
      return z;
    }
  }
  return 0;
}

cplx Region::base_tangent(double s) const {
  switch (kind_) {
    case RegionKind::disk:
      return cplx(0, 2 * pi * radius_) * std::polar(1.0, 2 * pi * s);
    case RegionKind::rectangle:
    case RegionKind::polygon: {
      const std::size_t n = vertices_.size();
      std::size_t i = std::upper_bound(cumlen_.begin(), cumlen_.end(), s) - cumlen_.begin();
      i = std::clamp<std::size_t>(i, 1, n) - 1;
      return (vertices_[(i + 1) % n] - vertices_[i]) / (cumlen_[i + 1] - cumlen_[i]);
    }
    case RegionKind::curve: {
      cplx z = 0;
      for (const auto& t : terms_)
        z += cplx(0, 2 * pi * t.k) * t.c * std::polar(1.0, 2 * pi * t.k * s);
      return z;
    }
  }
  return 0;
}

cplx Region::second_at(double t) const {
  t = wrap01(t);
  const double s = complement_ ? wrap01(1.0 - t) : t;
  if (kind_ == RegionKind::disk) return -std::pow(2 * pi, 2) * radius_ * std::polar(1.0, 2 * pi * s);
  if (kind_ != RegionKind::curve) return 0;
  cplx z = 0;
  for (const auto& term : terms_) {
    const double w = 2 * pi * term.k;
    z += -w * w * term.c * std::polar(1.0, w * s);
  }
  return z;
}

cplx Region::point_at(double t) const {
  t = wrap01(t);
  return complement_ ? base_point(wrap01(1.0 - t)) : base_point(t);
}

cplx Region::tangent_at(double t) const {
  t = wrap01(t);
  return complement_ ? -base_tangent(wrap01(1.0 - t)) : base_tangent(t);
}

double Region::perimeter() const { return perimeter_; }

std::pair<cplx, cplx> Region::bbox() const {
  auto box = [](const std::vector<cplx>& pts) {
    double x0 = pts[0].real(), x1 = x0, y0 = pts[0].imag(), y1 = y0;
    for (auto z : pts) {
      x0 = std::min(x0, z.real());
      x1 = std::max(x1, z.real());
      y0 = std::min(y0, z.imag());
      y1 = std::max(y1, z.imag());
    }
    return std::pair<cplx, cplx>{{x0, y0}, {x1, y1}};
  };
  switch (kind_) {
    case RegionKind::disk:
      return {center_ - cplx(radius_, radius_), center_ + cplx(radius_, radius_)};
    case RegionKind::curve:
      return box(dense_);
    default:
      return box(vertices_);
  }
}

double Region::diameter() const {
  auto [lo, hi] = bbox();
  return std::abs(hi - lo);
}

bool Region::inside_base(cplx z) const {
  switch (kind_) {
    case RegionKind::disk:
      return std::abs(z - center_) < radius_;
    case RegionKind::curve:
      return polyline_inside(dense_, z);
    default:
      return polyline_inside(vertices_, z);
  }
}

cplx Region::anchor() const {
  if (kind_ == RegionKind::disk) return center_;
  cplx c = 0;
  if (kind_ == RegionKind::curve) {
    for (const auto& t : terms_)
      if (t.k == 0) c += t.c;
  } else {
    for (auto v : vertices_) c += v;
    c /= double(vertices_.size());
  }
  const double diam = diameter();
  if (inside_base(c) && distance_to_boundary(c) > 0.05 * diam) return c;
  // fall back to the grid point deepest inside the shape
  auto [lo, hi] = bbox();
  cplx best = c;
  double bd = -1;
  for (int i = 1; i < 64; ++i)
    for (int j = 1; j < 64; ++j) {
      const cplx z(lo.real() + (hi.real() - lo.real()) * i / 64.0,
                   lo.imag() + (hi.imag() - lo.imag()) * j / 64.0);
      if (!inside_base(z)) continue;
      const double d = distance_to_boundary(z);
      if (d > bd) {
        bd = d;
        best = z;
      }
    }
  if (bd < 0) throw InvalidInput("could not find an interior anchor point");
  return best;
}

double Region::distance_to_boundary(cplx z) const {
  switch (kind_) {
    case RegionKind::disk:
      return std::abs(std::abs(z - center_) - radius_);
    case RegionKind::curve:
      return polyline_distance(dense_, z);
    default:
      return polyline_distance(vertices_, z);
  }
}

bool Region::contains(cplx z) const {
  if (distance_to_boundary(z) <= 1e-12 * diameter()) throw InvalidInput("boundary point");
  return inside_base(z) != complement_;
}

bool contains(const Region& r, cplx z) { return r.contains(z); }

std::vector<cplx> random_points(const Region& r, int count, std::mt19937_64& rng) {
  if (r.is_complement()) throw InvalidInput("random_points: region must be bounded");
  if (count < 0) throw InvalidInput("random_points: negative count");
  const auto [lo, hi] = r.bbox();
  std::uniform_real_distribution<double> ux(lo.real(), hi.real()), uy(lo.imag(), hi.imag());
  const double tol = 1e-12 * r.diameter();
  std::vector<cplx> out;
  out.reserve(count);
  while (int(out.size()) < count) {
    const double x = ux(rng), y = uy(rng);
    const cplx z(x, y);
    if (r.distance_to_boundary(z) > tol && r.contains(z)) out.push_back(z);
  }
  return out;
}

// ---------------------------------------------------------------- geometric constants

namespace {

struct CurveSamples {
  std::vector<cplx> d1, d2;
};

CurveSamples curve_derivatives(const Region& r, int m) {
  CurveSamples s;
  for (int j = 0; j < m; ++j) {
    const double t = double(j) / m;
    cplx a = 0, b = 0;
    for (const auto& term : r.terms()) {
      const cplx e = term.c * std::polar(1.0, 2 * pi * term.k * t);
      const double w = 2 * pi * term.k;
      a += cplx(0, w) * e;
      b += -w * w * e;
    }
    s.d1.push_back(a);
    s.d2.push_back(b);
  }
  return s;
}

}  // namespace

bool is_convex(const Region& r) {
  if (r.is_complement()) return false;
  switch (r.kind()) {
    case RegionKind::disk:
    case RegionKind::rectangle:
      return true;
    case RegionKind::polygon: {
      const auto& v = r.vertices();
      const std::size_t n = v.size();
      for (std::size_t i = 0; i < n; ++i)
        if (cross(v[i] - v[(i + n - 1) % n], v[(i + 1) % n] - v[i]) < 0) return false;
      return true;
    }
    case RegionKind::curve: {
      const auto s = curve_derivatives(r, 8192);
      double vmax = 0;
      for (auto d : s.d1) vmax = std::max(vmax, std::abs(d));
      for (std::size_t j = 0; j < s.d1.size(); ++j)
        if (cross(s.d1[j], s.d2[j]) < -1e-10 * vmax * vmax * vmax / r.diameter()) return false;
      return true;
    }
  }
  return false;
}

double rotation(const Region& r) {
  if (is_convex(r)) return 1.0;
  if (r.kind() == RegionKind::polygon) {
    const auto& v = r.vertices();
    const std::size_t n = v.size();
    double total = 0;
    for (std::size_t i = 0; i < n; ++i)
      total += std::abs(std::arg((v[(i + 1) % n] - v[i]) / (v[i] - v[(i + n - 1) % n])));
    return total / (2 * pi);
  }
  if (r.kind() == RegionKind::curve) {
    const auto s = curve_derivatives(r, 8192);
    double vmax = 0, vmin = std::numeric_limits<double>::infinity();
    for (auto d : s.d1) {
      vmax = std::max(vmax, std::abs(d));
      vmin = std::min(vmin, std::abs(d));
    }
    if (!(vmin > 1e-10 * vmax)) throw InvalidInput("rotation undefined: tangent vanishes");
    double total = 0;
    const std::size_t m = s.d1.size();
    for (std::size_t j = 0; j < m; ++j) {
      const double step = std::arg(s.d1[(j + 1) % m] / s.d1[j]);
      if (std::abs(step) > 0.5) throw InvalidInput("rotation undefined: tangent not resolved");
      total += std::abs(step);
    }
    return std::max(1.0, total / (2 * pi));
  }
  return 1.0;  // disks and rectangles are caught by is_convex unless complemented
}

// ---------------------------------------------------------------- quadrature

BoundaryQuadrature boundary_samples(const Region& r, int n_points) {
  if (n_points < 16) throw InvalidInput("boundary_samples: n_points must be at least 16");
  BoundaryQuadrature q;
  if (r.kind() == RegionKind::disk || r.kind() == RegionKind::curve) {
    for (int j = 0; j < n_points; ++j) {
      const double t = double(j) / n_points;
      q.nodes.push_back(r.point_at(t));
      q.weights.push_back(r.tangent_at(t) / double(n_points));
      q.params.push_back(t);
    }
    return q;
  }
  const auto v = r.oriented_vertices();
  const std::size_t n = v.size();
  const double per = r.perimeter();
  const auto& rule = gauss_legendre(8);
  double t0 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = v[i], b = v[(i + 1) % n];
    const double frac = std::abs(b - a) / per;
    const int middle = std::max(4, int(std::ceil(n_points * frac / 8.0)));
    add_panels(
        q, rule, graded_breaks(middle), [&](double s) { return a + s * (b - a); },
        [&](double) { return b - a; }, t0, t0 + frac);
    t0 += frac;
  }
  return q;
}

BoundaryQuadrature offset_boundary(const Region& r, double d, double max_panel) {
  if (!(d > 0) || !(max_panel > 0)) throw InvalidInput("offset_boundary: distances must be positive");
  BoundaryQuadrature q;
  auto trapezoid = [&](auto point, auto deriv, double speed) {
    const double len = speed;
    long n = std::max<long>(64, long(std::ceil(6.0 * len / d)));
    n = std::max<long>(n, long(std::ceil(16.0 * len / max_panel)));
    if (n > 400000) throw InvalidInput("offset_boundary: offset too small for the boundary size");
    for (long j = 0; j < n; ++j) {
      const double t = double(j) / n;
      q.nodes.push_back(point(t));
      q.weights.push_back(deriv(t) / double(n));
      q.params.push_back(t);
    }
  };
  if (r.kind() == RegionKind::disk) {
    const double rad = r.is_complement() ? r.radius() - d : r.radius() + d;
    if (!(rad > 0)) throw InvalidInput("offset distance too large for the disk");
    const double sgn = r.is_complement() ? -1.0 : 1.0;
    const cplx c = r.center();
    trapezoid([&](double t) { return c + std::polar(rad, sgn * 2 * pi * t); },
              [&](double t) { return cplx(0, sgn * 2 * pi * rad) * std::polar(1.0, sgn * 2 * pi * t); },
              2 * pi * rad);
    return q;
  }
  if (r.kind() == RegionKind::curve) {
    // p = z - i d T, p' = z'(1 + d kappa) with kappa the signed curvature of the oriented curve
    const int m = 8192;
    double maxspeed = 0;
    for (int j = 0; j < m; ++j) {
      const double t = double(j) / m;
      const cplx z1 = r.tangent_at(t);
      const cplx z2 = r.second_at(t);
      const double kappa = cross(z1, z2) / std::pow(std::abs(z1), 3);
      if (1 + d * kappa < 0.1) throw InvalidInput("offset distance too large for the curve");
      maxspeed = std::max(maxspeed, std::abs(z1) * (1 + d * kappa));
    }
    auto point = [&](double t) {
      const cplx z1 = r.tangent_at(t);
      return r.point_at(t) - cplx(0, d) * z1 / std::abs(z1);
    };
    auto deriv = [&](double t) {
      const cplx z1 = r.tangent_at(t);
      const cplx z2 = r.second_at(t);
      const double kappa = cross(z1, z2) / std::pow(std::abs(z1), 3);
      return z1 * (1 + d * kappa);
    };
    trapezoid(point, deriv, maxspeed);
  } else {
    const auto v = r.oriented_vertices();
    const std::size_t n = v.size();
    std::vector<cplx> tdir(n);
    std::vector<double> len(n), turn(n);
    for (std::size_t i = 0; i < n; ++i) {
      tdir[i] = v[(i + 1) % n] - v[i];
      len[i] = std::abs(tdir[i]);
      tdir[i] /= len[i];
    }
    for (std::size_t i = 0; i < n; ++i) turn[i] = std::arg(tdir[i] / tdir[(i + n - 1) % n]);
    struct Piece {
      bool arc;
      cplx a, b;  // segment end points, or arc centre and start normal
      double sweep, length;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx nrm = cplx(0, -1) * tdir[i];
      const double s0 = turn[i] < 0 ? d * std::tan(-turn[i] / 2) : 0.0;
      const std::size_t i1 = (i + 1) % n;
      const double s1 = turn[i1] < 0 ? d * std::tan(-turn[i1] / 2) : 0.0;
      if (s0 + s1 >= len[i] * (1 - 1e-9)) throw InvalidInput("offset distance too large for the polygon");
      const cplx a = v[i] + d * nrm + s0 * tdir[i];
      const cplx b = v[i1] + d * nrm - s1 * tdir[i];
      pieces.push_back({false, a, b, 0.0, std::abs(b - a)});
      if (turn[i1] > 0) pieces.push_back({true, v[i1], nrm, turn[i1], d * turn[i1]});
    }
    double total = 0;
    for (const auto& p : pieces) total += p.length;
    const auto& rule = gauss_legendre(16);
    double t0 = 0;
    for (const auto& p : pieces) {
      const int np = std::max(1, int(std::ceil(p.length / max_panel)));
      const double t1 = t0 + p.length / total;
      if (p.arc) {
        add_panels(
            q, rule, uniform_breaks(np),
            [&](double s) { return p.a + d * p.b * std::polar(1.0, p.sweep * s); },
            [&](double s) { return cplx(0, d * p.sweep) * p.b * std::polar(1.0, p.sweep * s); }, t0, t1);
      } else {
        add_panels(
            q, rule, uniform_breaks(np), [&](double s) { return p.a + s * (p.b - p.a); },
            [&](double) { return p.b - p.a; }, t0, t1);
      }
      t0 = t1;
    }
  }
  // the offset must keep its distance from every part of the boundary
  const double tol = r.kind() == RegionKind::curve ? 1e-3 : 1e-6;
  const std::size_t stride = std::max<std::size_t>(1, q.size() / 4096);
  for (std::size_t j = 0; j < q.size(); j += stride)
    if (r.distance_to_boundary(q.nodes[j]) < d * (1 - tol))
      throw InvalidInput("offset curve is not simple at this distance");
  return q;
}

double boundary_gap(const Region& a, const Region& b) {
  auto probe = [](const Region& r) {
    std::vector<cplx> pts;
    if (r.has_corners()) {
      const auto& v = r.vertices();
      for (std::size_t i = 0; i < v.size(); ++i)
        for (int k = 0; k < 256; ++k) pts.push_back(v[i] + (v[(i + 1) % v.size()] - v[i]) * (k / 256.0));
    } else {
      for (int k = 0; k < kDense; ++k) pts.push_back(r.point_at(double(k) / kDense));
    }
    return pts;
  };
  double g = std::numeric_limits<double>::infinity();
  for (auto z : probe(a)) g = std::min(g, b.distance_to_boundary(z));
  for (auto z : probe(b)) g = std::min(g, a.distance_to_boundary(z));
  return g;
}

void check_disjoint(const Region& a, const Region& b) {
  if (a.is_complement()) throw InvalidInput("E must be a bounded region");
  const double scale = std::max(a.diameter(), b.diameter());
  if (!(boundary_gap(a, b) > 1e-10 * scale)) throw InvalidInput("not disjoint: boundaries touch");
  // boundaries are separated, so containment of a single boundary point decides nesting
  const bool a_in_b = b.contains(a.point_at(0));
  const bool b_in_a = a.contains(b.point_at(0));
  if (a_in_b || b_in_a) throw InvalidInput("not disjoint: one set contains the other");
}

}  // namespace zolo

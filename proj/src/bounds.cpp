#include "zolo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zolo {

namespace {

void check_h(double h) {
  if (!(h > 1) || !std::isfinite(h)) throw InvalidInput("bounds: h must be a finite number > 1");
}

void check_n(int n) {
  if (n < 0) throw InvalidInput("bounds: n must be non-negative");
}

constexpr double inf = std::numeric_limits<double>::infinity();

}  // namespace

double m_n(double rotE, double rotF, double h, int n) {
  check_h(h);
  check_n(n);
  const double t = std::pow(h, -n);
  return 2 * rotE + 2 * t * rotF + 1 + t;
}

double tilde_m_n(double rotE, double rotF, double h, int n) {
  check_h(h);
  check_n(n);
  return 2 * rotE + 2 * std::pow(h, -n) * rotF;
}

ValidityConstants validity_constants(double rotE, double rotF, double h, Variant variant) {
  check_h(h);
  double x0;
  if (variant == Variant::A1) {
    const double a = rotE + 1;
    x0 = a + std::sqrt(a * a + 2 * rotF + 1);
  } else {
    const double a = rotE + 0.5;
    x0 = a + std::sqrt(a * a + 2 * rotF);
  }
  return {x0, std::max(1 + 1 / (h - 1), std::log(x0) / std::log(h))};
}

double general_bound(double mEF, double mFE, double h, int n) {
  check_h(h);
  check_n(n);
  const double t = std::pow(h, -n);
  const double one_m_t2 = 1 - t * t;
  const double q = 1 - (1 + mEF) * t;
  if (!(one_m_t2 > 0) || q == 0) return inf;
  const double num = mEF * mFE / one_m_t2 + 32.0 * n * mEF * t / (q * q);
  const double den = std::max(0.0, 1 - mEF * mFE / one_m_t2 * t - mEF / q * t - t * t);
  if (!(den > 0)) return inf;
  return num / den * t;
}

double convex_bound(double h, int n) {
  check_h(h);
  check_n(n);
  const double t = std::pow(h, -n);
  const double one_m_t2 = 1 - t * t;
  const double q = 1 - 4 * t - 3 * t * t;
  if (!(one_m_t2 > 0) || q == 0) return inf;
  const double a = 9 * (1 + t) * (1 + t) / one_m_t2;
  const double num = a + 96.0 * n * (1 + t) * t / (q * q);
  const double den = std::max(0.0, 1 - a * t - 3 * (1 + t) / q * t - t * t);
  if (!(den > 0)) return inf;
  return num / den * t;
}

BoundValue zolotarev_upper(const GeometryConstants& gc, int n) {
  check_h(gc.h);
  check_n(n);
  if (!(gc.rotE >= 1) || !(gc.rotF >= 1)) throw InvalidInput("bounds: rotations must be >= 1");
  BoundValue b;
  b.n = n;
  b.lower = zolotarev_lower(gc.h, n);
  const bool a1 = gc.variant == Variant::A1;
  b.mEF = a1 ? m_n(gc.rotE, gc.rotF, gc.h, n) : tilde_m_n(gc.rotE, gc.rotF, gc.h, n);
  b.mFE = a1 ? m_n(gc.rotF, gc.rotE, gc.h, n) : tilde_m_n(gc.rotF, gc.rotE, gc.h, n);
  const auto vc = validity_constants(gc.rotE, gc.rotF, gc.h, gc.variant);
  b.x0 = vc.x0;
  b.N0 = vc.N0;
  b.raw = (a1 && gc.convex) ? convex_bound(gc.h, n) : general_bound(b.mEF, b.mFE, gc.h, n);
  b.upper_valid = n > b.N0 && std::isfinite(b.raw);
  if (b.upper_valid && b.raw <= 1) {
    b.upper = b.raw;
    b.clamped = false;
  } else {
    b.upper = 1;
    b.clamped = true;
  }
  return b;
}

double asymptotic_constant(double rotE, double rotF, Variant variant) {
  if (!(rotE >= 1) || !(rotF >= 1)) throw InvalidInput("bounds: rotations must be >= 1");
  return variant == Variant::A1 ? (2 * rotE + 1) * (2 * rotF + 1) : 4 * rotE * rotF;
}

double zolotarev_lower(double h, int n) {
  check_h(h);
  check_n(n);
  return std::pow(h, -n);
}

double rn_bound_on_E(double rotE, double rotF, double h, int n) {
  const double t = std::pow(h, -n);
  return m_n(rotE, rotF, h, n) / (1 - t * t);
}

double inv_rn_bound_on_F(double rotE, double rotF, double h, int n, double C) {
  const double t = std::pow(h, -n), hn = std::pow(h, n);
  return m_n(rotF, rotE, h, n) * t / (1 - t * t) + witness_bound(C, h, n);
}

double inv_rn_lower_on_E(double rotE, double rotF, double h, int n, double C) {
  const double t = std::pow(h, -n), hn = std::pow(h, n);
  return (1 - t * t) / m_n(rotE, rotF, h, n) - m_n(rotF, rotE, h, n) * t / (1 - t * t) - 1 / (hn - C);
}

double witness_f(double alpha, double C, double h, int n) {
  const double p = std::pow(1 - alpha, n) * std::pow(h, n);
  return 4 * (1 - alpha) * C / (alpha * p * (p - C));
}

double witness_bound(double C, double h, int n) {
  const double hn = std::pow(h, n);
  return 32.0 * n * hn * C / ((hn - C) * (hn - C) * (hn + C));
}

}  // namespace zolo

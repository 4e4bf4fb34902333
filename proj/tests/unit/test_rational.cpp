#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zolo/faber.hpp"
#include "zolo/rational.hpp"

using namespace zolo;

namespace {

std::vector<cplx> circle(int n, double r = 1.0, cplx c = 0.0) {
  std::vector<cplx> z;
  for (int j = 0; j < n; ++j) z.push_back(c + std::polar(r, 2 * std::numbers::pi * (j + 0.3) / n));
  return z;
}

template <class F>
std::vector<cplx> sample(const std::vector<cplx>& z, F f) {
  std::vector<cplx> v;
  for (auto x : z) v.push_back(f(x));
  return v;
}

double nearest(const std::vector<cplx>& pts, cplx z) {
  double d = INFINITY;
  for (auto p : pts) d = std::min(d, std::abs(p - z));
  return d;
}

}  // namespace

TEST(Aaa, SimplePoleRecoveredExactly) {
  const auto z = circle(200);
  const auto f = sample(z, [](cplx x) { return 1.0 / (x - 2.0); });
  const auto r = aaa_fit(z, f);
  EXPECT_EQ(r.degree(), 1);
  EXPECT_LE(r.residual, 1e-13);
  EXPECT_NEAR(std::abs(bary_eval(r, 0.0) + 0.5), 0, 1e-13);
  const auto pz = poles_zeros(r);
  ASSERT_EQ(pz.poles.size(), 1u);
  EXPECT_NEAR(std::abs(pz.poles[0] - 2.0), 0, 1e-10);
  EXPECT_TRUE(pz.zeros.empty());
}

TEST(Aaa, DegreeTwoRational) {
  const auto z = circle(300);
  auto g = [](cplx x) { return (x * x + 1.0) / (x * x - 4.0); };
  const auto r = aaa_fit(z, sample(z, g));
  EXPECT_EQ(r.degree(), 2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int i = 0; i < 100; ++i) {
    const cplx x(u(rng), u(rng));
    if (std::abs(x * x - 4.0) < 0.3) continue;
    EXPECT_NEAR(std::abs(bary_eval(r, x) - g(x)), 0, 1e-12 * std::max(1.0, std::abs(g(x))));
  }
}

TEST(Aaa, MobiusPolesAndZeros) {
  const auto z = circle(200, 0.5);
  const auto r = aaa_fit(z, sample(z, [](cplx x) { return (x - 1.0) / (x + 1.0); }));
  const auto pz = poles_zeros(r);
  ASSERT_EQ(pz.poles.size(), 1u);
  ASSERT_EQ(pz.zeros.size(), 1u);
  EXPECT_NEAR(std::abs(pz.poles[0] + 1.0), 0, 1e-10);
  EXPECT_NEAR(std::abs(pz.zeros[0] - 1.0), 0, 1e-10);
}

TEST(Aaa, SupportPointsInterpolate) {
  const auto z = circle(100);
  const auto f = sample(z, [](cplx x) { return std::exp(x); });
  const auto r = aaa_fit(z, f, 1e-13, 20);
  for (std::size_t j = 0; j < r.support.size(); ++j) EXPECT_EQ(bary_eval(r, r.support[j]), r.values[j]);
}

TEST(Aaa, ReportedResidualMatchesRecomputation) {
  const auto z = circle(400);
  const auto f = sample(z, [](cplx x) { return std::tan(x); });
  for (int d : {3, 6, 10}) {
    const auto r = aaa_fit(z, f, 1e-15, d);
    double worst = 0;
    for (std::size_t i = 0; i < z.size(); ++i) worst = std::max(worst, std::abs(bary_eval(r, z[i]) - f[i]));
    EXPECT_NEAR(r.residual, worst, 1e-15 + 1e-12 * worst) << d;
  }
}

// Exact rationals of degree 1..12 with known poles and zeros; poles/zeros with a matched
// leading factor reproduce the barycentric form.
TEST(Aaa, RoundTripThroughPolesAndZerosUpToDegree12) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi), rad(1.6, 2.6), rin(0, 0.9);
  for (int d = 1; d <= 12; ++d) {
    std::vector<cplx> P, Z;
    for (int k = 0; k < d; ++k) {
      P.push_back(std::polar(rad(rng), ang(rng)));
      Z.push_back(std::polar(rin(rng), ang(rng)));
    }
    auto g = [&](cplx x) {
      cplx v = 1;
      for (int k = 0; k < d; ++k) v *= (x - Z[k]) / (x - P[k]);
      return v;
    };
    const auto z = circle(600, 1.2);
    const auto r = aaa_fit(z, sample(z, g));
    EXPECT_EQ(r.degree(), d);
    const auto pz = poles_zeros(r);
    ASSERT_EQ(int(pz.poles.size()), d) << d;
    ASSERT_EQ(int(pz.zeros.size()), d) << d;
    for (auto p : P) EXPECT_LT(nearest(pz.poles, p), 1e-6) << d;
    for (auto q : Z) EXPECT_LT(nearest(pz.zeros, q), 1e-6) << d;
    auto rebuilt = [&](cplx x) {
      cplx v = 1;
      for (int k = 0; k < d; ++k) v *= (x - pz.zeros[k]) / (x - pz.poles[k]);
      return v;
    };
    const cplx scale = bary_eval(r, z[0]) / rebuilt(z[0]);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int i = 0; i < 100; ++i) {
      const cplx x(u(rng), u(rng));
      const cplx want = bary_eval(r, x);
      EXPECT_LE(std::abs(scale * rebuilt(x) - want), 1e-8 * std::max(1.0, std::abs(want))) << d;
    }
  }
}

TEST(Aaa, StagnationIsFlagged) {
  std::vector<cplx> z;
  for (int j = 0; j < 200; ++j) z.push_back(-1.0 + 2.0 * j / 199);
  const auto r = aaa_fit(z, sample(z, [](cplx x) { return std::abs(x.real()) + 0.0 * x; }), 1e-15, 100);
  EXPECT_LT(r.degree(), 100);
  EXPECT_TRUE(r.stagnated || r.residual <= 1e-15);
}

TEST(Aaa, RejectsTooFewSamples) {
  EXPECT_THROW(aaa_fit({1.0, 2.0}, {1.0, 2.0}), InvalidInput);
  EXPECT_THROW(aaa_fit({1.0, 2.0, 3.0, 4.0}, {1.0, 2.0}), InvalidInput);
}

TEST(FaberFit, MobiusClustersAtPlusMinusC) {
  const Region E = Region::disk(1.0, .7);
  const auto map = std::make_shared<MobiusMap>(mobius_two_disks(E, E.negated()));
  const auto ctx = build_context(map, 3);
  const double c = std::sqrt(0.51);
  std::vector<cplx> z, f;
  for (int j = 0; j < 2000; ++j) {
    z.push_back(E.point_at(j / 2000.0));
    f.push_back(eval_rn(ctx, z.back()));
  }
  const auto pz = poles_zeros(aaa_fit(z, f, 1e-12, 8));
  ASSERT_GE(pz.zeros.size(), 1u);
  for (auto q : pz.zeros) EXPECT_LT(std::abs(q - c), 1e-3);
  for (auto p : pz.poles) EXPECT_LT(std::abs(p + c), 1e-3);
}

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "zolo/bounds.hpp"
#include "zolo/faber.hpp"
#include "zolo/rational.hpp"

using namespace zolo;

namespace {

std::shared_ptr<const ConformalMap> disks() {
  static const auto m = [] {
    const Region E = Region::disk(1.0, .7);
    return std::shared_ptr<const ConformalMap>(std::make_shared<MobiusMap>(mobius_two_disks(E, E.negated())));
  }();
  return m;
}

std::shared_ptr<const ConformalMap> rect() {
  static const auto m = [] {
    const Region E = Region::rectangle(-1.4, -.6, -.6, .6);
    return std::shared_ptr<const ConformalMap>(std::make_shared<AnnulusMap>(solve_annulus_map(E, E.negated())));
  }();
  return m;
}

std::shared_ptr<const ConformalMap> fig3() {
  static const auto m = [] {
    const Region E = Region::rectangle(.3, 1.3, -1.3, 1.3);
    return std::shared_ptr<const ConformalMap>(std::make_shared<AnnulusMap>(solve_annulus_map(E, E.negated())));
  }();
  return m;
}

cplx phi_n(const ConformalMap& m, cplx z, int n) { return std::pow(m.evaluate(z), n); }

// Points of the doubly connected domain inside the bounding box of both sets plus a margin,
// kept away from both boundaries.
std::vector<cplx> omega_cloud(const ConformalMap& m, int count, std::uint64_t seed) {
  const auto [a0, a1] = m.E().bbox();
  const auto [b0, b1] = m.F().bbox();
  const double x0 = std::min(a0.real(), b0.real()) - 1, x1 = std::max(a1.real(), b1.real()) + 1;
  const double y0 = std::min(a0.imag(), b0.imag()) - 1, y1 = std::max(a1.imag(), b1.imag()) + 1;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(x0, x1), uy(y0, y1);
  const double keep = 0.05 * m.E().diameter();
  std::vector<cplx> out;
  while (int(out.size()) < count) {
    const cplx z(ux(rng), uy(rng));
    if (m.E().distance_to_boundary(z) < keep || m.F().distance_to_boundary(z) < keep) continue;
    if (contains(m.E(), z) || contains(m.F(), z)) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace

TEST(FaberMobius, RnEqualsPhiNInsideE) {
  const auto ctx = build_context(disks(), 5);
  for (cplx z : {cplx(1, 0), cplx(1.5, .2), cplx(.4, -.3), cplx(1.69, 0)})
    EXPECT_NEAR(std::abs(eval_Rn(ctx, z) - phi_n(*disks(), z, 5)), 0, 1e-9) << z;
}

TEST(FaberMobius, InverseRnMatchesPhiN) {
  for (int n : {1, 3, 7}) {
    const auto ctx = build_context(disks(), n);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const cplx z(-2.5 + 5.0 * i / 19, -1.5 + 3.0 * j / 19);
        if (disks()->E().distance_to_boundary(z) < 1e-3 || disks()->F().distance_to_boundary(z) < 1e-3) continue;
        const auto inv = eval_inv_rn(ctx, z);
        if (inv.pole_proxy) continue;
        // In F, where r_n has its poles, 1/r_n is compared relative to its maximum h^-n on F.
        const cplx want = std::pow(disks()->evaluate(z), -n);
        const double err = contains(disks()->F(), z) ? std::abs(inv.value - want) * std::pow(disks()->h(), n)
                                                     : std::abs(1.0 / inv.value - 1.0 / want) / std::max(1.0, std::abs(1.0 / want));
        EXPECT_LE(err, 1e-8) << z << " n=" << n;
      }
  }
}

TEST(FaberMobius, EmpiricalRatioIsHToMinusN) {
  const double h = disks()->h();
  EXPECT_NEAR(empirical_ratio(build_context(disks(), 5)) * std::pow(h, 5), 1.0, 1e-6);
  EXPECT_EQ(empirical_ratio(build_context(disks(), 0)), 1.0);
}

TEST(FaberMobius, ZeroCounts) {
  EXPECT_EQ(count_zeros(build_context(disks(), 4)), 4);
  EXPECT_EQ(count_zeros(build_context(disks(), 1)), 1);
}

TEST(Faber, RejectsPointsInF) {
  const auto ctx = build_context(rect(), 3);
  EXPECT_THROW(eval_Rn(ctx, rect()->F().anchor()), InvalidInput);
  EXPECT_NO_THROW(eval_rn(ctx, rect()->F().anchor()));
}

TEST(Faber, RnBoundOnConvexE) {
  const double h = rect()->h();
  for (int n : {1, 2, 4, 8}) {
    const auto ctx = build_context(rect(), n);
    const double t = std::pow(h, -n);
    EXPECT_LE(ctx.max_Rn_on_E(), 3 * (1 + t) / (1 - t * t)) << n;
  }
}

TEST(Faber, RnBoundedOnEAtEverySample) {
  for (const auto& map : {rect(), fig3()}) {
    const double rE = rotation(map->E()), rF = rotation(map->F());
    for (int n : {1, 3, 6}) {
      const auto ctx = build_context(map, n);
      const double bound = rn_bound_on_E(rE, rF, map->h(), n);
      for (int j = 0; j < 400; ++j) {
        const cplx z = map->E().point_at((j + 0.5) / 400);
        EXPECT_LE(std::abs(eval_Rn(ctx, z)), bound) << n;
      }
    }
  }
}

TEST(Faber, RnMinusPhiNBoundedOnOmega) {
  for (const auto& map : {rect(), fig3()}) {
    for (int n : {2, 5}) {
      const auto ctx = build_context(map, n);
      const double C = 1 + ctx.max_Rn_on_E();
      for (cplx z : omega_cloud(*map, 1000, 5 + n))
        EXPECT_LE(std::abs(eval_Rn(ctx, z) - phi_n(*map, z, n)), C) << z;
    }
  }
  const auto ctx = build_context(rect(), 4);
  const double C = 1 + ctx.max_Rn_on_E();
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 40; ++j) {
      const cplx z(-3 + 6.0 * i / 39, -2 + 4.0 * j / 39);
      if (contains(rect()->E(), z) || contains(rect()->F(), z)) continue;
      EXPECT_LE(std::abs(eval_Rn(ctx, z) - phi_n(*rect(), z, 4)), C) << z;
    }
}

TEST(Faber, RnContinuousAcrossBoundaryOfE) {
  const auto ctx = build_context(rect(), 5);
  const double scale = 1 + ctx.max_Rn_on_E();
  const double eps = 1e-4;
  const cplx c = rect()->E().anchor();
  for (int j = 0; j < 10; ++j) {
    const cplx z0 = rect()->E().point_at(0.03 + 0.1 * j);
    const cplx zin = c + (z0 - c) * (1 - eps), zout = c + (z0 - c) * (1 + eps);
    EXPECT_LE(std::abs(eval_Rn(ctx, zin) - eval_Rn(ctx, zout)), 1e-2 * scale) << z0;
  }
}

TEST(Faber, InverseBoundsOnBoundaries) {
  const auto& map = rect();
  const double h = map->h();
  int checked_upper = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto ctx = build_context(map, n);
    const double C = 1 + ctx.max_Rn_on_E();
    if (!(std::pow(h, n) > C)) continue;
    const double up = inv_rn_bound_on_F(1, 1, h, n, C);
    const double lo = inv_rn_lower_on_E(1, 1, h, n, C);
    double maxF = 0, minE = INFINITY;
    for (int j = 0; j < 800; ++j) {
      const double t = (j + 0.5) / 800;
      maxF = std::max(maxF, std::abs(1.0 / eval_rn(ctx, map->F().point_at(t))));
      minE = std::min(minE, std::abs(1.0 / eval_rn(ctx, map->E().point_at(t))));
    }
    EXPECT_LE(maxF, up * (1 + 1e-8)) << n;
    if (lo > 0) EXPECT_GE(minE, lo * (1 - 1e-8)) << n;
    ++checked_upper;
  }
  EXPECT_GE(checked_upper, 8);
}

TEST(Faber, SandwichOnFirstFigurePair) {
  const double h = rect()->h();
  const GeometryConstants gc{h, 1, 1, true, Variant::A1};
  for (int n = 1; n <= 12; ++n) {
    const double ratio = empirical_ratio(build_context(rect(), n));
    EXPECT_GE(ratio, std::pow(h, -n) * (1 - 1e-9)) << n;
    const auto b = zolotarev_upper(gc, n);
    if (b.upper_valid) EXPECT_LE(ratio, b.upper) << n;
  }
}

TEST(Faber, ZeroCountsOnRectanglePairs) {
  EXPECT_EQ(count_zeros(build_context(fig3(), 8)), 8);
  for (int n : {2, 3, 6}) EXPECT_EQ(count_zeros(build_context(rect(), n)), n);
  EXPECT_EQ(count_zeros(build_context(rect(), 1)), 1);
}

TEST(Faber, FaberRationalHasTypeNN) {
  for (int n : {2, 4}) {
    const auto ctx = build_context(rect(), n);
    std::vector<cplx> z, f;
    for (int j = 0; j < 500; ++j) {
      for (const Region* r : {&rect()->E(), &rect()->F()}) {
        const cplx p = r->point_at((j + 0.5) / 500);
        z.push_back(p);
        f.push_back(eval_rn(ctx, p));
      }
    }
    const auto fit = aaa_fit(z, f, 1e-8, 3 * n);
    double fmax = 0;
    for (auto v : f) fmax = std::max(fmax, std::abs(v));
    EXPECT_LE(fit.residual, 1e-8 * fmax) << n;
    EXPECT_LE(fit.degree(), n) << n;
  }
}

TEST(Faber, ContextInvariants) {
  const auto ctx = build_context(rect(), 6);
  EXPECT_LE(ctx.max_phiN_on_E(), 1 + 6 * 10 * rect()->residual());
  EXPECT_NEAR(std::abs(ctx.Rn_at_infinity() - std::pow(rect()->at_infinity(), 6)), 0,
              1e-6 * std::abs(ctx.Rn_at_infinity()));
  for (std::size_t i = 0; i < ctx.quadF().size(); ++i) {
    const cplx z = ctx.quadF().nodes[i];
    EXPECT_LE(std::abs(ctx.Rn_on_F()[i] - phi_n(*rect(), z, 6)), 1 + ctx.max_Rn_on_E());
  }
}

TEST(Faber, BoundaryMaxRefinesSampling) {
  const Region d = Region::disk(0.0, 1);
  const cplx rot = std::polar(1.0, -0.1);
  const auto e = boundary_max(d, 16, [&](cplx z) { return 2 + (z * rot).real(); });
  EXPECT_NEAR(e.t, 0.1 / (2 * std::numbers::pi), 1e-6);
  EXPECT_NEAR(e.value, 3.0, 1e-12);
}

TEST(Faber, RejectsBadArguments) {
  EXPECT_THROW(build_context(rect(), -1), InvalidInput);
  EXPECT_THROW(build_context(rect(), 2, 10), InvalidInput);
}

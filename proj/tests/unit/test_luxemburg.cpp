#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "quasimod/builders.hpp"
#include "quasimod/error.hpp"
#include "quasimod/luxemburg.hpp"
#include "support/generators.hpp"

namespace quasimod {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Gauge over_scale_power(const DistanceMatrix& rho, double q) {
  auto table = std::make_shared<const DistanceMatrix>(rho);
  return Gauge::closed_form("power", rho.points(), std::nullopt, [table, q](std::size_t x, std::size_t y, double t) {
    return (*table)(x, y).scaled(std::pow(t, -q));
  });
}

Gauge inverse_scale(const DistanceMatrix& d) { return over_scale_power(d, 1.0); }

DistanceMatrix two_points(double ab, double ba) {
  return DistanceMatrix(PointSet({"a", "b"}), {ExtValue(0), ExtValue(ab), ExtValue(ba), ExtValue(0)});
}

TEST(LuxemburgInfimum, ClosedFormLevel) {
  const LuxemburgResult r = luxemburg_infimum([](double l) { return ExtValue(2.5 / l); });
  EXPECT_NEAR(r.value.value(), 2.5, 1e-9);
  EXPECT_LE(r.upper - r.lower, 1e-9);
  EXPECT_LE(r.lower, 2.5);
  EXPECT_GE(r.upper, 2.5);
}

TEST(LuxemburgInfimum, ZeroAndInfinity) {
  EXPECT_TRUE(luxemburg_infimum([](double) { return ExtValue(0); }).value.is_zero());
  const LuxemburgResult inf = luxemburg_infimum([](double) { return ExtValue(2); });
  EXPECT_TRUE(inf.value.is_infinite());
  LuxemburgOptions opt;
  opt.lambda_max = 10;
  EXPECT_TRUE(luxemburg_infimum([](double l) { return ExtValue(20 / l); }, opt).value.is_infinite());
  EXPECT_NEAR(luxemburg_infimum([](double l) { return ExtValue(5 / l); }, opt).value.value(), 5, 1e-9);
}

TEST(LuxemburgInfimum, TinyInfimumUsesRelativePrecision) {
  const LuxemburgResult r = luxemburg_infimum([](double l) { return ExtValue(1e-12 / l); });
  EXPECT_NEAR(r.value.value(), 1e-12, 1e-21);
}

TEST(LuxemburgInfimum, ValidatesOptions) {
  const auto level = [](double l) { return ExtValue(1 / l); };
  for (auto [c, tol, lmax] : {std::tuple{0.0, 1e-9, 1e12}, {1.0, 0.0, 1e12}, {1.0, 1e-9, kInf}, {1.0, 2.0, 1.0}}) {
    LuxemburgOptions opt{c, tol, lmax};
    EXPECT_THROW((void)luxemburg_infimum(level, opt), InvalidArgument);
  }
}

TEST(LuxemburgDistance, InverseScaleMetric) {
  const Gauge g = inverse_scale(two_points(2.5, 2.5));
  EXPECT_NEAR(luxemburg_distance(g, 0, 1).value.value(), 2.5, 1e-9);
  EXPECT_TRUE(luxemburg_distance(g, 1, 1).value.is_zero());
}

TEST(LuxemburgDistance, MinCapIsRejectedAsNonMonotone) {
  const Gauge g = make_min_cap(two_points(3, 3));
  try {
    (void)luxemburg_distance(g, 0, 1);
    FAIL() << "expected NonMonotoneError";
  } catch (const NonMonotoneError& e) {
    EXPECT_LT(e.lower_scale(), e.upper_scale());
    EXPECT_LT(e.lower_value(), e.upper_value());
  }
  // The predicate min{3, l} <= 1 holds at 0.5 and 1 but not at 2: a lower set.
  for (double l : {0.5, 1.0}) EXPECT_LE(g(0, 1, l).value(), 1.0);
  EXPECT_GT(g(0, 1, 2.0).value(), 1.0);
}

TEST(LuxemburgDistance, ConormGaugeRejected) {
  const Gauge g = make_ratio(two_points(1, 1));
  EXPECT_THROW((void)luxemburg_distance(g, 0, 1), InvalidArgument);
}

TEST(LuxemburgDistance, TabulatedGaugeReadsCeilingSteps) {
  // On (t_{k-1}, t_k] the tabulated gauge reads d / t_k, so the admissible
  // set is (t_{k-1}, inf) where t_k is the first grid scale >= d.
  const ScaleGrid grid{1.0, 2.0, 3.0, 4.0};
  const Gauge g = inverse_scale(two_points(2.5, 2.5)).tabulate(grid);
  EXPECT_NEAR(luxemburg_distance(g, 0, 1).value.value(), 2.0, 1e-9);
}

TEST(LuxemburgDistance, MonotoneInThreshold) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Gauge g = over_scale_power(testing::random_quasi_metric(rng, 4), testing::uniform(rng, 1, 2));
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y) {
        ExtValue prev = ExtValue::infinity();
        for (double c : {0.25, 0.5, 1.0, 2.0, 4.0}) {
          LuxemburgOptions opt;
          opt.threshold = c;
          const ExtValue v = luxemburg_distance(g, x, y, opt).value;
          EXPECT_LE(v.value(), prev.value() + 1e-9);
          prev = v;
        }
      }
  }
}

TEST(LuxemburgMatrix, RecoversMetricForInverseScale) {
  testing::Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const DistanceMatrix d = testing::random_quasi_metric(rng, 6, 0.0, 0.1);
    const DistanceMatrix lux = luxemburg_matrix(inverse_scale(d));
    for (std::size_t x = 0; x < 6; ++x)
      for (std::size_t y = 0; y < 6; ++y) EXPECT_NEAR(lux(x, y).value(), d(x, y).value(), 1e-9);
    EXPECT_TRUE(quasi_pseudometric_check(lux, 2e-9).ok());
  }
}

TEST(LuxemburgMatrix, UnreachablePairsAreInfinite) {
  const DistanceMatrix lux = luxemburg_matrix(inverse_scale(two_points(1, kInf)));
  EXPECT_TRUE(lux(1, 0).is_infinite());
  EXPECT_NEAR(lux(0, 1).value(), 1, 1e-9);
  EXPECT_TRUE(quasi_pseudometric_check(lux, 2e-9).ok());
}

TEST(Symmetrized, MaxOfDirections) {
  const Gauge g = inverse_scale(two_points(1, 3));
  EXPECT_NEAR(symmetrized_luxemburg(g, 0, 1).value(), 3, 1e-9);
  EXPECT_NEAR(symmetrized_luxemburg(g, 1, 0).value(), 3, 1e-9);
  const Gauge s = inverse_scale(two_points(2, 2));
  EXPECT_NEAR(symmetrized_luxemburg(s, 0, 1).value(), luxemburg_distance(s, 0, 1).value.value(), 1e-12);
}

TEST(Symmetrized, PseudometricOnRandomConvexGauges) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 5;
    const Gauge g = over_scale_power(testing::random_quasi_metric(rng, n, 0.0, 0.2), testing::uniform(rng, 1, 3));
    std::vector<ExtValue> v;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) v.push_back(symmetrized_luxemburg(g, x, y));
    const DistanceMatrix sym(g.points(), v);
    EXPECT_TRUE(sym.is_symmetric());
    const AxiomReport r = quasi_pseudometric_check(sym, 2e-9);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.properties.at("symmetric"));
    EXPECT_TRUE(quasi_pseudometric_check(luxemburg_matrix(g), 2e-9).ok());
  }
}

TEST(QuasiPseudometricCheck, CorruptionAndSinglePoint) {
  DistanceMatrix d(PointSet({"a", "b", "c"}), {ExtValue(0), ExtValue(1), ExtValue(2), ExtValue(1), ExtValue(0),
                                                  ExtValue(1), ExtValue(2), ExtValue(1), ExtValue(0)});
  EXPECT_TRUE(quasi_pseudometric_check(d).ok());
  d(0, 2) = ExtValue(2.5);
  const AxiomReport r = quasi_pseudometric_check(d);
  ASSERT_EQ(r.count("triangle"), 1u);
  EXPECT_EQ(r.violations.front().points, (std::vector<std::string>{"a", "b", "c"}));
  d(1, 1) = ExtValue(0.1);
  EXPECT_TRUE(quasi_pseudometric_check(d).has_violation("reflexive-zero"));
  EXPECT_TRUE(quasi_pseudometric_check(DistanceMatrix(PointSet({"x"}), {ExtValue(0)})).ok());
}

}  // namespace
}  // namespace quasimod

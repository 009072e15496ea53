#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "quasimod/conorm.hpp"
#include "quasimod/error.hpp"
#include "quasimod/ext_value.hpp"
#include "quasimod/point_set.hpp"
#include "quasimod/scale.hpp"
#include "support/generators.hpp"

namespace quasimod {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(ExtValue, RejectsNegativeAndNan) {
  EXPECT_THROW(ExtValue(-1e-300), InvalidArgument);
  EXPECT_THROW(ExtValue(std::nan("")), InvalidArgument);
  EXPECT_NO_THROW(ExtValue(0.0));
  EXPECT_TRUE(ExtValue(kInf).is_infinite());
}

TEST(ExtValue, InfinityAbsorbsAddition) {
  EXPECT_TRUE((ExtValue::infinity() + ExtValue(3)).is_infinite());
  EXPECT_TRUE((ExtValue(3) + ExtValue::infinity()).is_infinite());
  EXPECT_EQ(ExtValue(1.5) + ExtValue(2), ExtValue(3.5));
}

TEST(ExtValue, ZeroTimesInfinityIsZero) {
  EXPECT_TRUE(ExtValue::infinity().scaled(0.0).is_zero());
  EXPECT_TRUE(ExtValue::infinity().scaled(2.0).is_infinite());
  EXPECT_EQ(ExtValue(2).scaled(0.25), ExtValue(0.5));
  EXPECT_THROW(ExtValue(1).scaled(-1.0), InvalidArgument);
}

TEST(ExtValue, OrderAndMinMax) {
  EXPECT_LT(ExtValue(1), ExtValue::infinity());
  EXPECT_EQ(min(ExtValue(2), ExtValue::infinity()), ExtValue(2));
  EXPECT_TRUE(max(ExtValue(2), ExtValue::infinity()).is_infinite());
  std::ostringstream os;
  os << ExtValue::infinity() << ' ' << ExtValue(0.5);
  EXPECT_EQ(os.str(), "inf 0.5");
}

TEST(PointSet, LookupAndDuplicates) {
  PointSet p({"a", "b"});
  EXPECT_EQ(p.index_of("b"), 1u);
  EXPECT_THROW((void)p.index_of("c"), UnknownPoint);
  EXPECT_THROW(PointSet({"a", "a"}), InvalidArgument);
  EXPECT_EQ(PointSet::numbered(3).id(2), "p2");
}

TEST(ScaleGrid, Validation) {
  EXPECT_THROW(ScaleGrid(std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(ScaleGrid({1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(ScaleGrid({0.0, 1.0}), InvalidArgument);
  EXPECT_THROW(ScaleGrid({1.0, kInf}), InvalidArgument);
}

TEST(ScaleGrid, CeilingProjection) {
  const ScaleGrid g{1.0, 2.0, 4.0};
  EXPECT_EQ(g.project(0.3), 1.0);
  EXPECT_EQ(g.project(1.0), 1.0);
  EXPECT_EQ(g.project(1.5), 2.0);
  EXPECT_EQ(g.project(9.0), 4.0);
}

TEST(Profile, RightContinuousReading) {
  const Profile p(ScaleGrid{1.0, 2.0}, {ExtValue(0.7), ExtValue(0.2)});
  EXPECT_EQ(p.at(0.5), ExtValue(0.7));
  EXPECT_EQ(p.at(1.5), ExtValue(0.2));
  EXPECT_EQ(p.at(100), ExtValue(0.2));
  EXPECT_THROW((void)p.at(0.0), InvalidArgument);
  EXPECT_TRUE(p.is_nonincreasing());
}

TEST(Profile, RightRegularizeSuffixMax) {
  const ScaleGrid g{1.0, 2.0, 3.0};
  const Profile p(g, {ExtValue(0.5), ExtValue(0.7), ExtValue(0.3)});
  const Profile r = right_regularize(p);
  EXPECT_EQ(r, Profile(g, {ExtValue(0.7), ExtValue(0.7), ExtValue(0.3)}));
  EXPECT_EQ(right_regularize(r), r);
  const Profile single(ScaleGrid{1.0}, {ExtValue(0.4)});
  EXPECT_EQ(right_regularize(single), single);
}

TEST(Profile, RightRegularizeMatchesSuffixMaxOracle) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const ScaleGrid g = testing::random_grid(rng, 1 + testing::uniform_index(rng, 12));
    std::vector<ExtValue> v;
    for (std::size_t i = 0; i < g.size(); ++i) v.push_back(ExtValue(testing::uniform(rng, 0, 3)));
    const Profile p(g, v);
    const Profile r = right_regularize(p);
    EXPECT_TRUE(r.is_nonincreasing());
    EXPECT_EQ(right_regularize(r), r);
    if (p.is_nonincreasing()) EXPECT_EQ(r, p);
    for (std::size_t i = 0; i < g.size(); ++i) {
      ExtValue m = v[i];
      for (std::size_t j = i; j < g.size(); ++j) m = max(m, v[j]);
      EXPECT_EQ(r[i], m);
    }
  }
}

TEST(TConorm, Examples) {
  const TConorm prob(TConorm::Kind::ProbabilisticSum);
  EXPECT_NEAR(prob(0.2, 0.7), 0.76, 1e-15);
  EXPECT_EQ(TConorm{}(0.2, 0.7), 0.7);
  EXPECT_EQ(TConorm(TConorm::Kind::BoundedSum)(0.6, 0.7), 1.0);
  EXPECT_EQ(TConorm::parse("prob_sum"), prob);
  EXPECT_THROW(TConorm::parse("min"), InvalidArgument);
}

TEST(TConorm, AxiomsOnSamples) {
  testing::Rng rng(11);
  for (auto kind : {TConorm::Kind::Max, TConorm::Kind::ProbabilisticSum, TConorm::Kind::BoundedSum}) {
    const TConorm c(kind);
    for (int i = 0; i < 2000; ++i) {
      const double a = testing::uniform(rng, 0, 1), b = testing::uniform(rng, 0, 1), d = testing::uniform(rng, 0, 1);
      EXPECT_EQ(c(0.0, a), a);
      EXPECT_EQ(c(a, b), c(b, a));
      EXPECT_NEAR(c(c(a, b), d), c(a, c(b, d)), 1e-15);
      const double lo = std::min(b, d), hi = std::max(b, d);
      EXPECT_LE(c(a, lo), c(a, hi));
      EXPECT_GE(c(a, b), 0.0);
      EXPECT_LE(c(a, b), 1.0);
    }
  }
}

TEST(TConorm, SplitRadiusSatisfiesStrictBound) {
  for (auto kind : {TConorm::Kind::Max, TConorm::Kind::ProbabilisticSum, TConorm::Kind::BoundedSum}) {
    const TConorm c(kind);
    for (double r : {1e-9, 0.01, 0.3, 0.5, 0.9, 0.999999}) {
      const double s = c.split_radius(r);
      EXPECT_GT(s, 0.0);
      EXPECT_LT(c(s, s), r) << c.name() << " r=" << r;
    }
  }
  EXPECT_EQ(TConorm{}.split_radius(0.5), 0.25);
}

}  // namespace
}  // namespace quasimod

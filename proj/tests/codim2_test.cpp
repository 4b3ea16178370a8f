#include "bncount/codim2.hpp"

#include "gtest/gtest.h"

namespace bncount {
namespace {

TEST(SurfaceIntersection, KnownValuesForNets) {
  const BNInput p{10, 2, 8};
  EXPECT_EQ(surface_intersection(2, p).value, 23184);
  EXPECT_EQ(surface_intersection(3, p).value, 48384);
  EXPECT_EQ(surface_intersection(7, p).value, 48384);
  EXPECT_EQ(surface_intersection(8, p).value, 23184);
}

TEST(SurfaceIntersection, KnownValuesForPencils) {
  const BNInput p{10, 1, 5};
  EXPECT_EQ(surface_intersection(2, p).value, 2016);
  EXPECT_EQ(surface_intersection(3, p).value, 12096);
}

// The value is the sum of its own terms, and every factor is non-negative.
TEST(SurfaceIntersection, TermsReproduceValue) {
  for (const BNInput& p : {BNInput{10, 2, 8}, BNInput{10, 1, 5}, BNInput{8, 1, 4}}) {
    for (int i = 2; i <= p.g - 2; ++i) {
      const SurfaceIntersection t = surface_intersection(i, p);
      ExactInt total = 0;
      for (const auto& term : t.terms) {
        EXPECT_GE(term.left, 0);
        EXPECT_GE(term.right, 0);
        EXPECT_EQ(rho_adjusted({i, p.r, p.d}, term.a), -1);
        total += term.left * term.right;
      }
      EXPECT_EQ(total, t.value) << to_string(p) << " i=" << i;
      EXPECT_EQ(t.i, i);
    }
  }
}

TEST(SurfaceIntersection, Preconditions) {
  EXPECT_THROW(surface_intersection(2, {10, 2, 9}), PreconditionError);
  EXPECT_THROW(surface_intersection(1, {10, 2, 8}), PreconditionError);
  EXPECT_THROW(surface_intersection(9, {10, 2, 8}), PreconditionError);
}

TEST(ExactlyProportional, Cases) {
  using V = std::vector<ExactInt>;
  EXPECT_TRUE(exactly_proportional(V{2, 4}, V{3, 6}));
  EXPECT_FALSE(exactly_proportional(V{2, 4}, V{3, 7}));
  EXPECT_TRUE(exactly_proportional(V{0, 0}, V{1, 5}));
  EXPECT_TRUE(exactly_proportional(V{0, 3}, V{0, 9}));
  EXPECT_FALSE(exactly_proportional(V{0, 3}, V{1, 9}));
  EXPECT_FALSE(exactly_proportional(V{1}, V{1, 2}));
  EXPECT_TRUE(exactly_proportional(V{}, V{}));
}

TEST(ProportionalityReport, NetsAndPencilsAreNotProportional) {
  const ProportionalityReport report = proportionality_report({10, 2, 8}, {10, 1, 5}, {2, 3});
  EXPECT_FALSE(report.proportional);
  EXPECT_FALSE(report.ratio.has_value());
  EXPECT_EQ(report.first_values, (std::vector<ExactInt>{23184, 48384}));
  EXPECT_EQ(report.second_values, (std::vector<ExactInt>{2016, 12096}));
}

TEST(ProportionalityReport, SelfRatioIsOne) {
  const ProportionalityReport report = proportionality_report({10, 2, 8}, {10, 2, 8}, {2, 3, 4});
  EXPECT_TRUE(report.proportional);
  ASSERT_TRUE(report.ratio.has_value());
  EXPECT_EQ(*report.ratio, 1);
  EXPECT_THROW(proportionality_report({10, 2, 8}, {10, 2, 9}, {2}), PreconditionError);
}

}  // namespace
}  // namespace bncount

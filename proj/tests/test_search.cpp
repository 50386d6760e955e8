#include "polyhankel/nehari.hpp"
#include "polyhankel/search.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <stdexcept>

using namespace polyhankel;

namespace {

double recompute(const SearchResult& s) {
  return ratio(linear(s.b), linear(s.a), s.p).ratio;
}

} // namespace

TEST(Search, BoundedAtCriticalExponent) {
  const auto s = maximize_ratio_linear(2, p_zero(), 20, 100, 1);
  EXPECT_LE(s.best_ratio, 1.0 + 1e-3);
  EXPECT_GT(s.best_ratio, 0.9);
  EXPECT_NEAR(recompute(s), s.best_ratio, 1e-9);
}

TEST(Search, ReachesUniformPairAtInfinity) {
  const auto s = maximize_ratio_linear(2, std::numeric_limits<double>::infinity(), 4, 150, 2);
  EXPECT_GE(s.best_ratio, std::numbers::pi / (2 * std::sqrt(2.0)) - 1e-6);
  EXPECT_NEAR(recompute(s), s.best_ratio, 1e-9);
}

TEST(Search, ZeroIterationsReturnsStartPoint) {
  const auto s = maximize_ratio_linear(3, 4.0, 1, 0, 5);
  EXPECT_EQ(s.evaluations, 1u);
  ASSERT_EQ(s.trace.size(), 1u);
  EXPECT_EQ(s.trace.front(), s.best_ratio);
  // Steinhaus start: unit-modulus coordinates, first one real
  for (const auto* v : {&s.a, &s.b}) {
    ASSERT_EQ(v->size(), 3u);
    EXPECT_EQ((*v)[0], complex(1.0));
    for (const auto& z : *v)
      EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
  }
  EXPECT_NEAR(recompute(s), s.best_ratio, 1e-12);
}

TEST(Search, Deterministic) {
  const auto a = maximize_ratio_linear(2, 6.0, 3, 40, 77);
  const auto b = maximize_ratio_linear(2, 6.0, 3, 40, 77);
  EXPECT_EQ(a.best_ratio, b.best_ratio);
  EXPECT_EQ(a.a, b.a);
  EXPECT_EQ(a.b, b.b);
  EXPECT_EQ(a.restart, b.restart);
  EXPECT_EQ(a.evaluations, b.evaluations);
  EXPECT_EQ(a.seed, 77u);
}

TEST(Search, TraceIsNondecreasing) {
  const auto s = maximize_ratio_linear(3, 8.0, 2, 60, 3);
  ASSERT_FALSE(s.trace.empty());
  for (std::size_t i = 1; i < s.trace.size(); ++i)
    EXPECT_GE(s.trace[i], s.trace[i - 1]);
  EXPECT_EQ(s.trace.back(), s.best_ratio);
}

TEST(Search, RejectsBadArguments) {
  EXPECT_THROW((void)maximize_ratio_linear(4, 2.0, 1, 1, 0), std::invalid_argument);
  EXPECT_THROW((void)maximize_ratio_linear(0, 2.0, 1, 1, 0), std::invalid_argument);
  EXPECT_THROW((void)maximize_ratio_linear(2, 2.0, 0, 1, 0), std::invalid_argument);
  EXPECT_THROW((void)maximize_ratio_linear(2, -1.0, 1, 1, 0), std::invalid_argument);
}

TEST(Property, NeverExceedsOneBelowCriticalExponent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 1 + seed % 3;
    const double p = seed % 2 == 0 ? p_zero() : 2.0;
    const auto s = maximize_ratio_linear(d, p, 1, 40, seed);
    ASSERT_LE(s.best_ratio, 1.0 + 1e-3) << seed;
  }
}

TEST(LinearPairRatio, ZeroVectorsGiveZero) {
  const std::vector<complex> zero{0.0, 0.0};
  const std::vector<complex> one{1.0, 0.0};
  EXPECT_EQ(linear_pair_ratio(zero, one, 2.0), 0.0);
  EXPECT_EQ(linear_pair_ratio(one, zero, 2.0), 0.0);
}

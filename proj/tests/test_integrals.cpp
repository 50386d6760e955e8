#include "oracles.hpp"

#include "polyhankel/errors.hpp"
#include "polyhankel/integrals.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace polyhankel;

namespace {

const double two_sqrt2_over_pi = 2.0 * std::sqrt(2.0) / std::numbers::pi;
const double sqrt_pi_over_2 = std::sqrt(std::numbers::pi) / 2.0;

} // namespace

TEST(Method, Names) {
  EXPECT_EQ(to_string(Method::grid), "grid");
  EXPECT_EQ(parse_method("mc"), Method::mc);
  EXPECT_THROW((void)parse_method("simpson"), std::invalid_argument);
}

TEST(CircleMean, AgreesWithQuadratureAndEllipticIntegral) {
  const double pairs[][2] = {{1, 1}, {1, 0}, {0, 2}, {0.3, 1.7}, {2.0, 0.5}, {1e-8, 1.0}};
  for (const auto& ab : pairs) {
    const double a = ab[0];
    const double b = ab[1];
    const double ref = oracle::circle_average([a, b](double t) { return std::abs(a + b * std::exp(oracle::cd(0, t))); });
    EXPECT_NEAR(circle_mean_abs(a, b), ref, 1e-9 * (a + b)) << a << " " << b;
    if (a + b > 0) {
      const double k = 2.0 * std::sqrt(a * b) / (a + b);
      EXPECT_NEAR(circle_mean_abs(a, b), 2.0 / std::numbers::pi * (a + b) * std::comp_ellint_2(k), 1e-11 * (a + b));
    }
  }
  EXPECT_EQ(circle_mean_abs(0, 0), 0.0);
}

TEST(Grid, Examples) {
  const auto z1 = norm_grid(Symbol::monomial(MultiIndex::unit(0)), 1.0);
  EXPECT_NEAR(z1.value, 1.0, 1e-14);
  EXPECT_EQ(z1.std_error, 0.0);
  EXPECT_EQ(z1.method, Method::grid);
  EXPECT_FALSE(z1.seed.has_value());

  const auto nl2 = norm_grid(normalized_linear(2), 1.0);
  EXPECT_NEAR(nl2.value, two_sqrt2_over_pi, 1e-6);
  const double oracle_value = oracle::two_term_l1(1 / std::sqrt(2.0), 1 / std::sqrt(2.0));
  EXPECT_NEAR(oracle_value, two_sqrt2_over_pi, 1e-9);
  EXPECT_NEAR(nl2.value, oracle_value, 1e-9);

  EXPECT_NEAR(norm_grid(normalized_linear(2), 2.0).value, 1.0, 1e-12);
}

TEST(Grid, ThreeVariablesAgainstTwoAngleOracle) {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 3; ++trial) {
    const auto c = oracle::random_complex(gen, 3);
    const double ref = oracle::three_term_l1(c[0], c[1], c[2]);
    EXPECT_NEAR(norm_grid(linear(c), 1.0).value, ref, 1e-5 * ref);
  }
}

TEST(Grid, NonLinearSymbolAgainstBruteForce) {
  const Symbol z1 = Symbol::monomial(MultiIndex::unit(0));
  const Symbol z2 = Symbol::monomial(MultiIndex::unit(1));
  const Symbol f = Symbol::constant(0.4) + z1 * z1 + complex(0, 0.7) * z2 + 0.2 * (z1 * z2);
  const int n = 1024;
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::vector<complex> z{std::polar(1.0, 2 * std::numbers::pi * i / n),
                                   std::polar(1.0, 2 * std::numbers::pi * j / n)};
      s += std::pow(std::abs(f.evaluate(z)), 3.0);
    }
  const double ref = std::cbrt(s / (double(n) * n));
  EXPECT_NEAR(norm_grid(f, 3.0).value, ref, 1e-8 * ref);
}

TEST(Grid, FourVariables) {
  const auto r = norm_grid(normalized_linear(4), 1.0);
  EXPECT_NEAR(r.value, 0.899546239888, 1e-8);
  // pinning and the closed-form fiber leave three of five variables
  EXPECT_NO_THROW((void)norm_grid(linear(std::vector<complex>{1, 2, 3, 4, 5}), 2.0));
  const Symbol mixed = Symbol::constant(1.0) + linear(std::vector<complex>{1, 2, 3, 4, 5, 6});
  EXPECT_THROW((void)norm_grid(mixed, 1.0), WidthTooLarge);
}

TEST(Grid, ConstantsAndZero) {
  EXPECT_EQ(norm_grid(Symbol::constant(complex(3, 4)), 1.0).value, 5.0);
  EXPECT_EQ(norm_grid(Symbol{}, 1.0).value, 0.0);
}

TEST(Grid, RejectsQBelowOne) {
  EXPECT_THROW((void)norm_grid(normalized_linear(2), 0.5), std::invalid_argument);
}

TEST(Grid, NoConvergenceWithTinyBudget) {
  GridOptions o;
  o.tol = 1e-15;
  o.max_doublings = 1;
  const Symbol z1 = Symbol::monomial(MultiIndex::unit(0));
  const Symbol z2 = Symbol::monomial(MultiIndex::unit(1));
  const Symbol f = z1 * z1 + complex(0.3, 0.2) * z2 + 0.5 * z1 * z2 * z2;
  EXPECT_THROW((void)norm_grid(f, 1.5, o), NoConvergence);
}

TEST(Mc, ConstantIntegrand) {
  const auto r = norm_mc(Symbol::monomial(MultiIndex::unit(0)), 1.0, 1000, 1);
  EXPECT_NEAR(r.value, 1.0, 1e-15);
  EXPECT_EQ(r.std_error, 0.0);
  EXPECT_EQ(r.method, Method::mc);
  EXPECT_EQ(r.samples_or_nodes, 1000u);
  EXPECT_EQ(r.seed, std::uint64_t{1});
}

TEST(Mc, MatchesGridWithinFourSigma) {
  const auto grid = norm_grid(normalized_linear(2), 1.0);
  const auto mc = norm_mc(normalized_linear(2), 1.0, 1'000'000, 42);
  EXPECT_GT(mc.std_error, 0.0);
  EXPECT_LT(std::abs(mc.value - grid.value), 4 * mc.std_error);
}

TEST(Mc, SteinhausLimit) {
  const auto r = norm_mc(normalized_linear(64), 1.0, 1'000'000, 20160601);
  EXPECT_NEAR(r.value, sqrt_pi_over_2, 0.02);
  EXPECT_LT(r.std_error, 5e-4);
}

TEST(Mc, DeterministicAcrossThreadCounts) {
  const Symbol f = normalized_linear(5);
  McOptions one;
  one.threads = 1;
  one.chunk_size = 1000;
  McOptions four = one;
  four.threads = 4;
  const auto a = norm_mc(f, 1.0, 12345, 99, one);
  const auto b = norm_mc(f, 1.0, 12345, 99, four);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
  const auto c = norm_mc(f, 1.0, 12345, 100, one);
  EXPECT_NE(a.value, c.value);
}

TEST(Mc, RejectsTooFewSamples) {
  EXPECT_THROW((void)norm_mc(normalized_linear(2), 1.0, 1, 0), std::invalid_argument);
}

TEST(Property, L1BelowL2) {
  std::mt19937_64 gen(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_complex(gen, 1 + trial % 3);
    const Symbol f = linear(c) * linear(c) + Symbol::constant(c[0]);
    GridOptions o;
    o.tol = 1e-6;
    EXPECT_LE(norm_grid(f, 1.0, o).value, f.l2_norm() * (1 + 1e-5));
  }
}

TEST(Property, OptimalKhintchineLowerBound) {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto b = oracle::random_complex(gen, 1 + trial % 3);
    EXPECT_GE(norm_grid(linear(b), 1.0).value, sqrt_pi_over_2 * oracle::l2(b) - 1e-6);
  }
}

TEST(Property, ShiftInvariance) {
  std::mt19937_64 gen(43);
  for (int trial = 0; trial < 10; ++trial) {
    const Symbol f = linear(oracle::random_complex(gen, 3));
    for (std::size_t k : {1, 4, 30}) {
      EXPECT_EQ(norm_grid(shift(f, k), 1.0).value, norm_grid(f, 1.0).value);
      EXPECT_EQ(norm_mc(shift(f, k), 1.0, 2000, 5).value, norm_mc(f, 1.0, 2000, 5).value);
    }
  }
}

TEST(Property, MultiplicativeOnDisjointVariables) {
  std::mt19937_64 gen(47);
  for (int trial = 0; trial < 6; ++trial) {
    const Symbol f1 = linear(oracle::random_complex(gen, 2));
    const Symbol f2 = linear(oracle::random_complex(gen, 2));
    const double product = norm_grid(f1 * shift(f2, f1.width()), 1.0).value;
    EXPECT_NEAR(product, norm_grid(f1, 1.0).value * norm_grid(f2, 1.0).value, 1e-8 * product);
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fejer/error.hpp"
#include "fejer/hconvexity.hpp"

using namespace fejer;

namespace {

double square(double x) { return x * x; }
double root(double x) { return std::sqrt(x); }

}  // namespace

TEST(CheckHConvex, Examples) {
  const auto sq = check_h_convex(square, HKernel::power(1), 0, 1, 21);
  EXPECT_TRUE(sq.passed());
  EXPECT_EQ(sq.checked_triples, 21u * 21u * 21u);
  EXPECT_EQ(sq.max_violation, 0.0);
  EXPECT_TRUE(check_h_convex(root, HKernel::power(0.5), 0, 1, 21).passed());
  const auto bad = check_h_convex(root, HKernel::power(1), 0, 1, 21);
  EXPECT_FALSE(bad.passed());
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_LE(bad.violations.size(), ConvexityReport::kMaxListed);
  const auto& worst = bad.violations.front();
  EXPECT_NEAR(worst.lhs, root(worst.lambda * worst.x + (1 - worst.lambda) * worst.y), 1e-15);
  EXPECT_NEAR(worst.rhs, worst.lambda * root(worst.x) + (1 - worst.lambda) * root(worst.y), 1e-15);
}

TEST(CheckHConvex, MaxViolationIsLargestListedExcess) {
  const auto r = check_h_convex(root, HKernel::power(1), 0, 4, 15);
  double largest = 0.0;
  for (const auto& v : r.violations) largest = std::max(largest, v.lhs - v.rhs);
  EXPECT_EQ(r.max_violation, largest);
  EXPECT_GT(r.violation_count, r.violations.size());
}

TEST(CheckHConvex, InputValidation) {
  EXPECT_THROW(check_h_convex(square, HKernel::power(1), 0, 1, 2), ParameterError);
  EXPECT_THROW(check_h_convex(square, HKernel::power(1), 1, 0, 5), ParameterError);
  EXPECT_THROW(check_h_convex([](double x) { return x - 0.5; }, HKernel::power(1), 0, 1, 5), NegativityError);
}

TEST(CheckHConvex, GodunovaLevinKernel) {
  // Nonnegative convex functions satisfy the inequality for every kernel with h(t) >= t.
  EXPECT_TRUE(check_h_convex(square, HKernel::power(-1), 0, 2, 11).passed());
  EXPECT_TRUE(check_h_convex([](double x) { return std::exp(x); }, HKernel::constant(1), -1, 1, 11).passed());
}

TEST(HConvexityProperty, LargerToleranceNeverAddsViolations) {
  std::size_t previous = SIZE_MAX;
  for (double tol : {0.0, 1e-3, 1e-2, 5e-2, 0.1, 0.2, 0.25}) {
    const auto r = check_h_convex(root, HKernel::power(1), 0, 1, 15, tol);
    EXPECT_LE(r.violation_count, previous);
    previous = r.violation_count;
  }
  EXPECT_EQ(previous, 0u);
}

TEST(HConvexityProperty, ConvexPassImpliesPFunctionPass) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> c(0.0, 2.0), shift(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double c2 = c(rng), c4 = c(rng), s = shift(rng), c0 = c(rng);
    auto phi = [=](double x) { return c0 + c2 * (x - s) * (x - s) + c4 * std::pow(x - s, 4); };
    const auto convex = check_h_convex(phi, HKernel::power(1), -1, 1, 11);
    if (convex.passed()) {
      EXPECT_TRUE(check_h_convex(phi, HKernel::constant(1), -1, 1, 11).passed());
      EXPECT_TRUE(check_h_convex(phi, HKernel::power(0.5), -1, 1, 11).passed());
    }
  }
}

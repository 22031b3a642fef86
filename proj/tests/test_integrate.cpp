#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fejer/error.hpp"
#include "fejer/integrate.hpp"
#include "oracle.hpp"

using namespace fejer;

TEST(Integrate, DocumentedExamples) {
  EXPECT_NEAR(integrate([](double x) { return x * x; }, 0, 1), 1.0 / 3.0, 1e-10);
  EXPECT_EQ(integrate([](double) { return 1.0; }, 0, 1), 1.0);
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0, 2), std::exp(2.0) - 1.0, 1e-9);
}

TEST(Integrate, EndpointSingularities) {
  EXPECT_NEAR(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0, 1), 2.0, 1e-8);
  EXPECT_NEAR(integrate([](double x) { return std::pow(1.0 - x, -0.5); }, 0, 1), 2.0, 1e-8);
  EXPECT_NEAR(integrate([](double x) { return std::sqrt(x); }, 0, 1), 2.0 / 3.0, 1e-10);
}

TEST(Integrate, KinksAndDegenerateIntervals) {
  EXPECT_NEAR(integrate([](double x) { return std::fabs(x - 0.3); }, 0, 1), (0.09 + 0.49) / 2, 1e-10);
  EXPECT_EQ(integrate([](double x) { return x; }, 2, 2), 0.0);
  EXPECT_THROW(integrate([](double x) { return x; }, 2, 1), ParameterError);
}

TEST(Integrate, DepthExhaustionReportsSubinterval) {
  QuadratureSettings s;
  s.max_depth = 2;
  s.abs_tol = 1e-14;
  s.rel_tol = 0;
  try {
    integrate([](double x) { return std::sin(200 * x); }, 0, 10, s);
    FAIL() << "expected DepthExhaustedError";
  } catch (const DepthExhaustedError& e) {
    EXPECT_NE(std::string(e.what()).find("["), std::string::npos);
  }
}

TEST(Integrate, SettingsValidation) {
  QuadratureSettings s;
  s.abs_tol = 0;
  EXPECT_THROW(s.validate(), ParameterError);
  s = {};
  s.rel_tol = -1;
  EXPECT_THROW(s.validate(), ParameterError);
  s = {};
  s.max_depth = 0;
  EXPECT_THROW(s.validate(), ParameterError);
}

TEST(SupNorm, DocumentedExamples) {
  EXPECT_EQ(sup_norm([](double x) { return x; }, 0, 1, 101), 1.0);
  EXPECT_NEAR(sup_norm([](double x) { return x * (1 - x); }, 0, 1, 1001), 0.25, 1e-6);
  EXPECT_EQ(sup_norm([](double) { return 3.0; }, 2, 5, 11), 3.0);
  EXPECT_EQ(sup_norm([](double x) { return -2 * x; }, 0, 1, 11), 2.0);
  EXPECT_THROW(sup_norm([](double x) { return x; }, 0, 1, 1), ParameterError);
}

TEST(QNorm, DocumentedExamples) {
  EXPECT_NEAR(q_norm([](double) { return 1.0; }, 2), 1.0, 1e-12);
  EXPECT_NEAR(q_norm([](double s) { return s; }, 2), 1.0 / std::sqrt(3.0), 1e-8);
  EXPECT_NEAR(q_norm([](double s) { return s; }, 1), 0.5, 1e-12);
  EXPECT_THROW(q_norm([](double s) { return s; }, 0.5), ParameterError);
}

TEST(IntegrateProperty, AgreesWithOracleOnRandomSmoothFunctions) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> c(-2, 2), lo(-3, 0), len(0.1, 4);
  for (int i = 0; i < 50; ++i) {
    const double p = c(rng), q = c(rng), r = c(rng), a = lo(rng), b = a + len(rng);
    auto f = [=](double x) { return p * std::sin(q * x) + r * std::exp(0.3 * x) + x * x; };
    EXPECT_NEAR(integrate(f, a, b), oracle::gauss_legendre(f, a, b), 1e-8 * (1 + std::fabs(integrate(f, a, b))));
  }
}

TEST(IntegrateProperty, LinearityAndAdditivity) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  for (int i = 0; i < 30; ++i) {
    const double alpha = u(rng), beta = u(rng), a = -u(rng), b = u(rng), m = 0.5 * (a + b) + 0.1 * u(rng);
    auto f = [](double x) { return std::cos(x) + x * x * x; };
    auto g = [](double x) { return std::exp(-x * x); };
    const double lhs = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, a, b);
    EXPECT_NEAR(lhs, alpha * integrate(f, a, b) + beta * integrate(g, a, b), 1e-9);
    EXPECT_NEAR(integrate(f, a, b), integrate(f, a, m) + integrate(f, m, b), 1e-9);
  }
}

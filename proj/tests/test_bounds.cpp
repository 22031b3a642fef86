#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fejer/bounds.hpp"
#include "fejer/error.hpp"
#include "fejer/mapping.hpp"
#include "oracle.hpp"

using namespace fejer;

namespace {

ProblemSpec spec(const char* f, const char* fp, const char* g, double a, double b) {
  return ProblemSpec::parse(f, fp, g, a, b);
}

std::string exact(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

const ProblemSpec kSquare = spec("x^2", "2*x", "1", 0, 1);
const ProblemSpec kExp = spec("exp(x)", "exp(x)", "1", 0, 2);
const ProblemSpec kWorked = spec("(2/3)*x^1.5", "x^0.5", "1", 0, 1);

}  // namespace

TEST(FejerTriple, Examples) {
  const auto t = fejer_triple(kSquare);
  EXPECT_NEAR(t.lhs, 0.25, 1e-12);
  EXPECT_NEAR(t.mid, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(t.rhs, 0.5, 1e-12);
  EXPECT_TRUE(t.left_holds && t.right_holds);
  const auto affine = fejer_triple(spec("x", "1", "1", 0, 1));
  EXPECT_NEAR(affine.lhs, 0.5, 1e-12);
  EXPECT_NEAR(affine.mid, 0.5, 1e-12);
  EXPECT_NEAR(affine.rhs, 0.5, 1e-12);
  const auto weighted = fejer_triple(spec("x^2", "2*x", "6*x*(1-x)", 0, 1));
  EXPECT_NEAR(weighted.lhs, 0.25, 1e-12);
  EXPECT_NEAR(weighted.mid, 0.3, 1e-12);
  EXPECT_NEAR(weighted.rhs, 0.5, 1e-12);
}

TEST(BoundHConvex, Examples) {
  const auto r = bound_h_convex(kSquare, HKernel::power(1));
  EXPECT_NEAR(r.measured, 1.0 / 6.0, 1e-10);
  EXPECT_NEAR(r.bound, 0.25, 1e-12);
  EXPECT_TRUE(r.satisfied);
  EXPECT_EQ(r.label, "h_convex[power:1]");
  const auto flat = bound_h_convex(spec("3", "0", "x*(1-x)", 0, 1), HKernel::power(0.5));
  EXPECT_NEAR(flat.measured, 0.0, 1e-15);
  EXPECT_GE(flat.bound, 0.0);
  const auto worked = bound_h_convex(kWorked, HKernel::power(0.5));
  EXPECT_NEAR(worked.measured, 1.0 / 15.0, 1e-10);
  EXPECT_NEAR(worked.bound, 0.160947570824873, 1e-10);
  EXPECT_TRUE(worked.satisfied);
  EXPECT_TRUE(worked.warnings.empty());
}

TEST(BoundHConvex, HypothesisFailuresAreReported) {
  EXPECT_THROW(bound_h_convex(spec("x^2", "2*x", "x", 0, 1), HKernel::power(1)), SymmetryViolationError);
  EXPECT_THROW(bound_h_convex(kSquare, HKernel::power(-1)), NonIntegrableKernelError);
  // |f'| = sqrt(x) is not convex, so the power(1) run carries a warning.
  EXPECT_FALSE(bound_h_convex(kWorked, HKernel::power(1)).warnings.empty());
  EXPECT_FALSE(bound_h_convex(spec("x^2", "2*x", "cos(6*(x-0.5))", 0, 1), HKernel::power(1)).warnings.empty());
}

TEST(BoundMirror, Examples) {
  EXPECT_NEAR(bound_h_convex_mirror(kSquare, HKernel::power(1)).bound, 0.25, 1e-10);
  EXPECT_NEAR(bound_h_convex_mirror(spec("2", "0", "1", 0, 1), HKernel::power(1)).measured, 0.0, 1e-15);
  const auto p = spec("exp(x)", "exp(x)", "x*(2-x)", 0, 2);
  EXPECT_NEAR(bound_h_convex_mirror(p, HKernel::power(1)).bound, bound_h_convex(p, HKernel::power(1)).bound, 1e-8);
}

TEST(BoundSConvex, Examples) {
  EXPECT_NEAR(bound_s_convex(kSquare, 1.0).bound, 0.25, 1e-12);
  EXPECT_NEAR(bound_s_convex(kWorked, 0.5).bound, 0.160947570824873, 1e-10);
  EXPECT_NEAR(bound_s_convex(spec("1", "0", "1", 0, 1), 0.5).measured, 0.0, 1e-15);
  EXPECT_THROW(bound_s_convex(kSquare, 0.0), ParameterError);
  EXPECT_THROW(bound_s_convex(kSquare, 1.5), ParameterError);
}

TEST(BoundConvex, Examples) {
  EXPECT_NEAR(bound_convex_left(kSquare).bound, 0.25, 1e-12);
  EXPECT_NEAR(bound_convex_right(kSquare).bound, 0.25, 1e-12);
  EXPECT_NEAR(classical_trapezoid_bound(kSquare), 0.25, 1e-15);
  const auto e = bound_convex_left(kExp);
  EXPECT_NEAR(e.measured, 2.0, 1e-9);
  // The weighted form integrates g over the half interval; with g = 1 on [0,2] this is (1 + e^2)/2.
  EXPECT_NEAR(e.bound, 0.5 * (1.0 + std::exp(2.0)), 1e-9);
  EXPECT_NEAR(e.bound / (kExp.width() * kExp.width()), (1.0 + std::exp(2.0)) / 8.0, 1e-9);
  EXPECT_TRUE(e.satisfied);
  EXPECT_NEAR(bound_convex_left(spec("2*x+1", "2", "1", 0, 3)).measured, 0.0, 1e-12);
}

TEST(BoundReference, DominatesMeasuredGap) {
  const auto r = bound_reference_convex(kExp);
  EXPECT_TRUE(r.satisfied);
  EXPECT_NEAR(r.measured, 2.0, 1e-9);
}

TEST(BoundBoundedDerivative, Examples) {
  const auto sq = bound_bounded_derivative(kSquare, {0.0, 2.0});
  EXPECT_NEAR(sq.offset, 0.0, 1e-12);
  EXPECT_NEAR(sq.primary.measured, 1.0 / 6.0, 1e-10);
  EXPECT_NEAR(sq.primary.bound, 0.25, 1e-10);
  EXPECT_TRUE(sq.primary.satisfied && sq.sup_form.satisfied && sq.holder_form.satisfied);
  const auto ex = bound_bounded_derivative(kExp, {1.0, std::exp(2.0)});
  EXPECT_NEAR(ex.primary.measured, 1.0, 1e-9);
  EXPECT_NEAR(ex.primary.bound, (std::exp(2.0) - 1.0) / 4.0, 1e-9);
  EXPECT_TRUE(ex.primary.warnings.empty());
  for (double eps : {1e-1, 1e-3, 1e-6}) {
    const auto lin = bound_bounded_derivative(spec("3*x", "3", "1", 0, 1), {3 - eps, 3 + eps});
    EXPECT_NEAR(lin.primary.measured, 0.0, 1e-12);
    EXPECT_LE(lin.primary.bound, eps);
  }
  EXPECT_FALSE(bound_bounded_derivative(kSquare, {0.0, 1.0}).primary.warnings.empty());
  EXPECT_THROW(bound_bounded_derivative(kSquare, {2.0, 1.0}), ParameterError);
}

TEST(BoundLipschitz, Examples) {
  const auto r = bound_lipschitz(kSquare, {2.0});
  EXPECT_NEAR(r.primary.measured, 1.0 / 6.0, 1e-10);
  EXPECT_NEAR(r.primary.bound, 1.0 / 6.0, 1e-9);
  EXPECT_NEAR(r.sup_form.bound, 2.0 / 12.0, 1e-12);
  EXPECT_TRUE(r.primary.satisfied && r.sup_form.satisfied);
  EXPECT_NEAR(bound_lipschitz(spec("5*x-1", "5", "1", 0, 2), {1.0}).primary.measured, 0.0, 1e-12);
  EXPECT_FALSE(bound_lipschitz(kSquare, {1.0}).primary.warnings.empty());
  EXPECT_THROW(bound_lipschitz(kSquare, {0.0}), ParameterError);
}

namespace {

struct Family {
  const char* f;
  const char* fp;
};

const Family kFamilies[] = {{"x^2", "2*x"}, {"exp(x)", "exp(x)"}, {"x^4", "4*x^3"}, {"cos(x)", "-sin(x)"}};

}  // namespace

TEST(BoundsProperty, DominanceAndMirrorOnRandomProblems) {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> lo(0.0, 1.0), len(0.2, 2.0), c(0.2, 2.0);
  for (int i = 0; i < 16; ++i) {
    const auto& fam = kFamilies[i % 4];
    const double a = lo(rng), b = a + len(rng), m = 0.5 * (a + b);
    const std::string g = exact(c(rng)) + "+(x-(" + exact(m) + "))^2";
    const auto p = spec(fam.f, fam.fp, g.c_str(), a, b);
    for (const auto& h : {HKernel::power(1), HKernel::power(0.5), HKernel::constant(1)}) {
      const auto direct = bound_h_convex(p, h);
      if (!direct.warnings.empty()) continue;  // hypotheses not met for this combination
      EXPECT_LE(std::fabs(trapezoid_gap(p)), direct.bound + 1e-8) << fam.f << " " << g << " " << h.describe();
      EXPECT_NEAR(bound_h_convex_mirror(p, h).bound, direct.bound, 1e-8);
    }
  }
}

TEST(BoundsProperty, BoundMatchesBruteForceOracle) {
  const Expression fp = Expression::parse("exp(x)");
  const Expression g = Expression::parse("(x+1)*(2-x)");
  for (double k : {-0.5, 0.25, 0.5, 1.0, 2.0}) {
    const auto p = spec("exp(x)", "exp(x)", "(x+1)*(2-x)", -1, 2);
    const double expected =
        oracle::h_convex_bound(fp, g, [k](double t) { return std::pow(t, k); }, -1, 2);
    EXPECT_NEAR(bound_h_convex(p, HKernel::power(k)).bound, expected, 1e-8 * (1 + expected)) << k;
  }
}

TEST(BoundsProperty, ScaleEquivariance) {
  // Scaling f by c scales gap and bound by |c|; scaling g by c does the same.
  const auto base = bound_h_convex(spec("exp(x)", "exp(x)", "x*(2-x)", 0, 2), HKernel::power(0.5));
  const auto fscaled = bound_h_convex(spec("3*exp(x)", "3*exp(x)", "x*(2-x)", 0, 2), HKernel::power(0.5));
  const auto gscaled = bound_h_convex(spec("exp(x)", "exp(x)", "2.5*x*(2-x)", 0, 2), HKernel::power(0.5));
  EXPECT_NEAR(fscaled.measured, 3 * base.measured, 1e-9);
  EXPECT_NEAR(fscaled.bound, 3 * base.bound, 1e-9);
  EXPECT_NEAR(gscaled.measured, 2.5 * base.measured, 1e-9);
  EXPECT_NEAR(gscaled.bound, 2.5 * base.bound, 1e-9);
}

TEST(BoundsProperty, KernelDominanceOrdersBounds) {
  // h1 <= h2 pointwise implies bound(h1) <= bound(h2): t <= t^0.5 <= 1 <= t^-0.5 on (0,1).
  const auto p = spec("exp(x)", "exp(x)", "1+(x-1)^2", 0, 2);
  const double b1 = bound_h_convex(p, HKernel::power(1)).bound;
  const double b2 = bound_h_convex(p, HKernel::power(0.5)).bound;
  const double b3 = bound_h_convex(p, HKernel::constant(1)).bound;
  const double b4 = bound_h_convex(p, HKernel::power(-0.5)).bound;
  EXPECT_LE(b1, b2);
  EXPECT_LE(b2, b3);
  EXPECT_LE(b3, b4);
}

TEST(BoundsProperty, SConvexAgreesWithPowerKernel) {
  for (double s : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    EXPECT_NEAR(bound_s_convex(kWorked, s).bound, bound_h_convex(kWorked, HKernel::power(s)).bound, 1e-9);
    EXPECT_NEAR(bound_s_convex(kExp, s).bound, bound_h_convex(kExp, HKernel::power(s)).bound, 1e-9);
  }
}

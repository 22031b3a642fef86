#include "fejer/battery.hpp"

#include <cmath>
#include <functional>

#include "fejer/applications.hpp"
#include "fejer/bounds.hpp"
#include "fejer/error.hpp"
#include "fejer/hconvexity.hpp"
#include "fejer/mapping.hpp"
#include "fejer/quadrature.hpp"

namespace fejer {

double BatteryCase::slack() const {
  if (relation == Relation::AtMost) return expected - value;
  return tolerance - std::fabs(value - expected);
}

bool BatterySummary::all_passed() const { return failures() == 0; }

std::size_t BatterySummary::failures() const {
  std::size_t n = 0;
  for (const auto& c : cases) n += c.passed ? 0 : 1;
  return n;
}

namespace {

using Relation = BatteryCase::Relation;

struct CaseDef {
  std::string name;
  Relation relation;
  double expected;
  double tolerance;
  std::function<double()> compute;
};

ProblemSpec problem(const char* f, const char* fprime, const char* g, double a, double b) {
  return ProblemSpec::parse(f, fprime, g, a, b);
}

std::vector<CaseDef> definitions() {
  const double e2 = std::exp(2.0);
  const double worked_bound = 0.160947570824873;  // (1/1.5) int_0^{1/2} [u^1.5 + 1 - (1-u)^1.5] du

  return {
      {"expr.abs_linear", Relation::Equals, 1.0, 0.0,
       [] { return Expression::parse("abs(x-1)+2*x")(0.0); }},
      {"expr.sqrt_via_power", Relation::Equals, std::sqrt(2.0), 1e-12,
       [] { return Expression::parse("x^0.5")(2.0); }},
      {"integrate.exp_0_2", Relation::Equals, e2 - 1.0, 1e-9,
       [] { return integrate([](double x) { return std::exp(x); }, 0.0, 2.0); }},
      {"kernel.half_interval_power_-0.5", Relation::Equals, 2.0, 1e-12,
       [] { return HKernel::power(-0.5).half_interval_integral(); }},
      {"kernel.custom_half_interval_sqrt", Relation::Equals, 1.0 / 1.5, 1e-9,
       [] { return HKernel::custom(Expression::parse("x^0.5")).half_interval_integral(); }},
      {"lemma.m_value_constant_weight", Relation::Equals, 0.5, 1e-10,
       [] { return m_value(problem("x^2", "2*x", "1", 0, 1), 0.25); }},
      {"lemma.m_value_parabola_t0", Relation::Equals, 1.0 / 6.0, 1e-10,
       [] { return m_value(problem("x^2", "2*x", "x*(1-x)", 0, 1), 0.0); }},
      {"lemma.antisymmetry_parabola", Relation::AtMost, 1e-8, 0.0,
       [] { return m_antisymmetry_defect(problem("x^2", "2*x", "x*(1-x)", 0, 1), 101); }},
      {"lemma.abs_integral_parabola", Relation::Equals, 5.0 / 48.0, 1e-8,
       [] { return m_abs_integral(problem("x^2", "2*x", "x*(1-x)", 0, 1)); }},
      {"lemma.sup_bound_constant_weight", Relation::AtMost, 0.5, 1e-8,
       [] { return m_bound_sup(problem("x^2", "2*x", "1", 0, 1)).measured; }},
      {"lemma.holder_bound_constant_weight", Relation::Equals, 2.0 * std::sqrt(2.0) / 3.0, 1e-9,
       [] { return m_bound_holder(problem("x^2", "2*x", "1", 0, 1), {2.0, 2.0}).bound; }},
      {"lemma.trapezoid_gap_exp", Relation::Equals, 2.0, 1e-9,
       [] { return trapezoid_gap(problem("exp(x)", "exp(x)", "1", 0, 2)); }},
      {"lemma.identity_exp_parabola", Relation::AtMost, 1e-7, 0.0,
       [] { return lemma_identity_defect(problem("exp(x)", "exp(x)", "x*(1-x)", 0, 1)); }},
      {"lemma.mirrored_identity_exp", Relation::AtMost, 1e-7, 0.0,
       [] { return mirrored_identity_defect(problem("exp(x)", "exp(x)", "1", 0, 2)); }},
      {"fejer.triple_mid_parabola_weight", Relation::Equals, 0.3, 1e-10,
       [] { return fejer_triple(problem("x^2", "2*x", "6*x*(1-x)", 0, 1)).mid; }},
      {"theorem.h_convex_square", Relation::Equals, 0.25, 1e-10,
       [] { return bound_h_convex(problem("x^2", "2*x", "1", 0, 1), HKernel::power(1)).bound; }},
      {"theorem.worked_s_half_measured", Relation::Equals, 1.0 / 15.0, 1e-10,
       [] {
         return bound_h_convex(problem("(2/3)*x^1.5", "x^0.5", "1", 0, 1), HKernel::power(0.5)).measured;
       }},
      {"theorem.worked_s_half_bound", Relation::Equals, worked_bound, 1e-12,
       [] { return bound_h_convex(problem("(2/3)*x^1.5", "x^0.5", "1", 0, 1), HKernel::power(0.5)).bound; }},
      {"theorem.s_convex_expanded", Relation::Equals, worked_bound, 1e-12,
       [] { return bound_s_convex(problem("(2/3)*x^1.5", "x^0.5", "1", 0, 1), 0.5).bound; }},
      {"theorem.mirror_equals_direct", Relation::AtMost, 1e-8, 0.0,
       [] {
         const auto p = problem("exp(x)", "exp(x)", "x*(2-x)", 0, 2);
         return std::fabs(bound_h_convex(p, HKernel::power(1)).bound -
                          bound_h_convex_mirror(p, HKernel::power(1)).bound);
       }},
      {"corollary.convex_recapture", Relation::Equals, 0.25, 1e-12,
       [] { return bound_convex_left(problem("x^2", "2*x", "1", 0, 1)).bound; }},
      {"corollary.convex_left_exp", Relation::Equals, 0.5 * (1.0 + e2), 1e-9,
       [] { return bound_convex_left(problem("exp(x)", "exp(x)", "1", 0, 2)).bound; }},
      {"corollary.convex_right_exp_dominates", Relation::AtMost, 0.5 * (1.0 + e2), 1e-9,
       [] { return bound_convex_right(problem("exp(x)", "exp(x)", "1", 0, 2)).measured; }},
      {"remark.bounded_derivative_exp", Relation::Equals, (e2 - 1.0) / 4.0, 1e-9,
       [] {
         return bound_bounded_derivative(problem("exp(x)", "exp(x)", "1", 0, 2), {1.0, std::exp(2.0)})
             .primary.bound;
       }},
      {"remark.lipschitz_square", Relation::Equals, 1.0 / 6.0, 1e-9,
       [] { return bound_lipschitz(problem("x^2", "2*x", "1", 0, 1), {2.0}).primary.bound; }},
      {"remark.lipschitz_square_sup", Relation::Equals, 1.0 / 6.0, 1e-12,
       [] { return bound_lipschitz(problem("x^2", "2*x", "1", 0, 1), {2.0}).sup_form.bound; }},
      {"means.log_mean_n3", Relation::Equals, std::cbrt(15.0 / 4.0), 1e-12,
       [] { return gen_log_mean(1.0, 2.0, 3.0); }},
      {"means.corollary_measured", Relation::Equals, 0.75, 1e-12,
       [] { return means_bound_check({1.0, 2.0, 3.0, 1.0}).measured; }},
      {"means.corollary_bound", Relation::Equals, 1.875, 1e-12,
       [] { return means_bound_check({1.0, 2.0, 3.0, 1.0}).bound; }},
      {"means.kernel_half", Relation::Equals, 0.965685424949238, 1e-12,
       [] { return means_bound_check({1.0, 2.0, 2.0, 0.5}).bound; }},
      {"moments.symmetric_density_mean", Relation::Equals, 1.5, 1e-10,
       [] { return lambda_moment(DensitySpec::make(Expression::parse("6*(x-1)*(2-x)"), 1, 2), 1.0); }},
      {"moments.uniform_second_moment", Relation::Equals, 7.0 / 3.0, 1e-10,
       [] { return lambda_moment(DensitySpec::make(Expression::parse("1"), 1, 2), 2.0); }},
      {"moments.expectation_bound_k1", Relation::Equals, 0.5, 1e-12,
       [] {
         return moment_bound_check(DensitySpec::make(Expression::parse("6*(x-1)*(2-x)"), 1, 2),
                                   Expression::parse("x"), Expression::parse("1"), HKernel::power(1))
             .bound;
       }},
      {"moments.expectation_bound_k0", Relation::Equals, 1.0, 1e-12,
       [] {
         return moment_bound_check(DensitySpec::make(Expression::parse("1"), 1, 2), Expression::parse("x"),
                                   Expression::parse("1"), HKernel::power(0))
             .bound;
       }},
      {"quadrature.trapezoid_exp_n4", Relation::Equals, 6.521610109481282, 1e-9,
       [] {
         const auto p = problem("exp(x)", "exp(x)", "1", 0, 2);
         return trapezoid_weighted(p, Partition::uniform(0, 2, 4));
       }},
      {"quadrature.bound_exp_n4", Relation::Equals, 0.815201263685160, 1e-12,
       [] {
         const auto p = problem("exp(x)", "exp(x)", "1", 0, 2);
         return error_bound_power(p, 1.0, Partition::uniform(0, 2, 4));
       }},
      {"quadrature.actual_error_exp_n4", Relation::Equals, 0.132554010550631, 1e-9,
       [] {
         const auto p = problem("exp(x)", "exp(x)", "1", 0, 2);
         return run_quadrature(p, HKernel::power(1), Partition::uniform(0, 2, 4)).actual_error;
       }},
      {"quadrature.adaptive_square", Relation::Equals, 2.0, 0.0,
       [] {
         const auto r = adaptive_refine(problem("x^2", "2*x", "1", 0, 1), HKernel::power(1), 0.13, 64);
         return static_cast<double>(r.partition.intervals());
       }},
      {"hconvex.sqrt_is_s_convex", Relation::Equals, 0.0, 0.0,
       [] {
         return static_cast<double>(
             check_h_convex([](double x) { return std::sqrt(x); }, HKernel::power(0.5), 0, 1, 21)
                 .violation_count);
       }},
      {"hconvex.sqrt_not_convex", Relation::Equals, 1.0, 0.0,
       [] {
         return check_h_convex([](double x) { return std::sqrt(x); }, HKernel::power(1), 0, 1, 21).passed()
                    ? 0.0
                    : 1.0;
       }},
  };
}

}  // namespace

BatterySummary run_battery(const BatteryOptions& options) {
  BatterySummary summary;
  for (auto& def : definitions()) {
    BatteryCase c;
    c.name = def.name;
    c.relation = def.relation;
    c.expected = def.name == options.inject_fault ? -def.expected : def.expected;
    c.tolerance = def.tolerance;
    try {
      c.value = def.compute();
      if (c.relation == Relation::AtMost)
        c.passed = c.value <= c.expected + c.tolerance;
      else
        c.passed = std::fabs(c.value - c.expected) <= c.tolerance;
    } catch (const Error& e) {
      c.error = e.what();
      c.passed = false;
    }
    summary.cases.push_back(std::move(c));
  }
  return summary;
}

Json to_json(const BatteryCase& c) {
  Json j{{"name", c.name},
         {"relation", c.relation == Relation::AtMost ? "at_most" : "equals"},
         {"value", c.value},
         {"expected", c.expected},
         {"tolerance", c.tolerance},
         {"slack", c.slack()},
         {"passed", c.passed}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

Json to_json(const BatterySummary& s) {
  Json cases = Json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(c));
  return Json{{"total", s.cases.size()},
              {"failures", s.failures()},
              {"all_passed", s.all_passed()},
              {"cases", cases}};
}

}  // namespace fejer

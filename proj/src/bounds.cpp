#include "fejer/bounds.hpp"

#include <cmath>
#include <random>

#include "fejer/detail/format.hpp"
#include "fejer/error.hpp"
#include "fejer/hconvexity.hpp"

namespace fejer {

namespace {

void require_symmetric(const ProblemSpec& p, const std::string& what) {
  if (!p.g_symmetric())
    throw SymmetryViolationError(what + " requires g symmetric about (a+b)/2 (defect " +
                                 detail::shortest(p.symmetry_defect()) + ")");
}

void add_weight_warnings(const ProblemSpec& p, BoundReport& r) {
  if (!p.g_nonnegative()) r.warnings.emplace_back("g takes negative values");
}

void add_hconvexity_warning(const ProblemSpec& p, const HKernel& h, BoundReport& r) {
  try {
    const auto report = check_h_convex([&](double x) { return std::fabs(p.fprime_at(x)); }, h, p.a(),
                                       p.b(), kHypothesisGrid);
    if (!report.passed())
      r.warnings.push_back("|f'| is not " + h.describe() + "-convex on [a,b]: " +
                           std::to_string(report.violation_count) + " violating triples, max " +
                           detail::shortest(report.max_violation));
  } catch (const Error& e) {
    r.warnings.push_back(std::string("h-convexity of |f'| not checked: ") + e.what());
  }
}

double integrate_x(const ProblemSpec& p, double lo, double hi, const ScalarFunction& weight_times,
                   const QuadratureSettings& s) {
  return integrate([&](double x) { return p.g_at(x) * weight_times(x); }, lo, hi, s);
}

double measured_gap(const ProblemSpec& p, const QuadratureSettings& s) {
  return std::fabs(trapezoid_gap(p, s));
}

}  // namespace

FejerTriple fejer_triple(const ProblemSpec& p, const QuadratureSettings& s) {
  const double mass = integrate([&](double x) { return p.g_at(x); }, p.a(), p.b(), s);
  FejerTriple t;
  t.lhs = p.f_at(p.midpoint()) * mass;
  t.mid = integrate([&](double x) { return p.f_at(x) * p.g_at(x); }, p.a(), p.b(), s);
  t.rhs = 0.5 * (p.f_at(p.a()) + p.f_at(p.b())) * mass;
  t.left_holds = t.lhs <= t.mid + kDefaultReportTol * (1.0 + std::fabs(t.mid));
  t.right_holds = t.mid <= t.rhs + kDefaultReportTol * (1.0 + std::fabs(t.rhs));
  return t;
}

BoundReport bound_h_convex(const ProblemSpec& p, const HKernel& h, const QuadratureSettings& s) {
  require_symmetric(p, "the h-convex bound");
  h.require_integrable(s);
  const double a = p.a(), w = p.width();
  const double inner = integrate_x(
      p, a, p.midpoint(), [&](double x) { return h.sum_cumulative((x - a) / w, s); }, s);
  auto r = BoundReport::make("h_convex[" + h.describe() + "]", measured_gap(p, s),
                             w * p.endpoint_slope_sum() * inner);
  add_weight_warnings(p, r);
  add_hconvexity_warning(p, h, r);
  return r;
}

BoundReport bound_h_convex_mirror(const ProblemSpec& p, const HKernel& h, const QuadratureSettings& s) {
  require_symmetric(p, "the mirrored h-convex bound");
  h.require_integrable(s);
  const double b = p.b(), w = p.width();
  const double inner = integrate_x(
      p, p.midpoint(), b, [&](double x) { return h.sum_cumulative(std::max(0.0, (b - x) / w), s); }, s);
  auto r = BoundReport::make("h_convex_mirror[" + h.describe() + "]", measured_gap(p, s),
                             w * p.endpoint_slope_sum() * inner);
  add_weight_warnings(p, r);
  add_hconvexity_warning(p, h, r);
  return r;
}

BoundReport bound_s_convex(const ProblemSpec& p, double s_exp, const QuadratureSettings& s) {
  if (!(s_exp > 0.0 && s_exp <= 1.0)) throw ParameterError("s-convex bound requires s in (0,1]");
  require_symmetric(p, "the s-convex bound");
  const double a = p.a(), b = p.b(), w = p.width();
  const double e = 1.0 + s_exp;
  const double inner = integrate_x(
      p, a, p.midpoint(),
      [&](double x) { return std::pow((x - a) / w, e) - std::pow((b - x) / w, e) + 1.0; }, s);
  auto r = BoundReport::make("s_convex[" + detail::shortest(s_exp) + "]", measured_gap(p, s),
                             w / e * p.endpoint_slope_sum() * inner);
  add_weight_warnings(p, r);
  add_hconvexity_warning(p, HKernel::power(s_exp), r);
  return r;
}

BoundReport bound_convex_left(const ProblemSpec& p, const QuadratureSettings& s) {
  require_symmetric(p, "the convex bound");
  const double a = p.a();
  const double inner = integrate_x(p, a, p.midpoint(), [&](double x) { return x - a; }, s);
  auto r = BoundReport::make("convex_left", measured_gap(p, s), p.endpoint_slope_sum() * inner);
  add_weight_warnings(p, r);
  add_hconvexity_warning(p, HKernel::power(1.0), r);
  return r;
}

BoundReport bound_convex_right(const ProblemSpec& p, const QuadratureSettings& s) {
  require_symmetric(p, "the convex bound");
  const double b = p.b();
  const double inner = integrate_x(p, p.midpoint(), b, [&](double x) { return b - x; }, s);
  auto r = BoundReport::make("convex_right", measured_gap(p, s), p.endpoint_slope_sum() * inner);
  add_weight_warnings(p, r);
  add_hconvexity_warning(p, HKernel::power(1.0), r);
  return r;
}

double classical_trapezoid_bound(const ProblemSpec& p) {
  return p.width() * p.width() * p.endpoint_slope_sum() / 8.0;
}

BoundReport bound_reference_convex(const ProblemSpec& p, const QuadratureSettings& s) {
  require_symmetric(p, "the reference convex bound");
  const double a = p.a(), b = p.b();
  const double outer = integrate(
      [&](double t) {
        const double lo = 0.5 * ((1.0 + t) * a + (1.0 - t) * b);
        const double hi = 0.5 * ((1.0 - t) * a + (1.0 + t) * b);
        return integrate([&](double x) { return p.g_at(x); }, lo, std::max(lo, hi), s);
      },
      0.0, 1.0, s);
  auto r = BoundReport::make("reference_convex", measured_gap(p, s),
                             0.25 * p.width() * p.endpoint_slope_sum() * outer);
  add_weight_warnings(p, r);
  add_hconvexity_warning(p, HKernel::power(1.0), r);
  return r;
}

void DerivBounds::validate() const {
  if (!std::isfinite(m_lo) || !std::isfinite(m_hi) || !(m_lo < m_hi))
    throw ParameterError("derivative bounds require finite m < M");
}

BoundedDerivativeReports bound_bounded_derivative(const ProblemSpec& p, DerivBounds d,
                                                  ConjugateExponents pq, const QuadratureSettings& s,
                                                  int sup_samples) {
  d.validate();
  pq.validate();
  const double w = p.width();
  const double spread = d.m_hi - d.m_lo;

  std::vector<std::string> warnings;
  const double slack = 1e-9 * (1.0 + std::fabs(d.m_lo) + std::fabs(d.m_hi));
  constexpr int kSamples = 201;
  int outside = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = i == kSamples - 1 ? p.b() : p.a() + w * i / (kSamples - 1);
    const double v = p.fprime_at(x);
    if (v < d.m_lo - slack || v > d.m_hi + slack) ++outside;
  }
  if (outside > 0)
    warnings.push_back("f' leaves [m, M] at " + std::to_string(outside) + " of " +
                       std::to_string(kSamples) + " sample points");
  if (!p.g_nonnegative()) warnings.emplace_back("g takes negative values");

  BoundedDerivativeReports out;
  out.offset = 0.25 * (d.m_lo + d.m_hi) * m_integral(p, s);
  const double measured = std::fabs(trapezoid_gap(p, s) / w - out.offset);
  const double sup = sup_norm([&](double x) { return p.g_at(x); }, p.a(), p.b(), sup_samples);
  const double gq = q_norm([&](double u) { return p.g_param(u); }, pq.q, s);

  out.primary = BoundReport::make("bounded_derivative", measured, 0.25 * spread * w * m_abs_integral(p, s));
  out.sup_form = BoundReport::make("bounded_derivative_sup", measured, spread * w * sup / 8.0);
  out.holder_form =
      BoundReport::make("bounded_derivative_holder", measured, 0.5 * spread * w * gq * holder_factor(pq.p));
  out.primary.warnings = warnings;
  out.sup_form.warnings = warnings;
  out.holder_form.warnings = warnings;
  if (!p.g_symmetric()) {
    out.sup_form.warnings.emplace_back("g is not symmetric about (a+b)/2");
    out.holder_form.warnings.emplace_back("g is not symmetric about (a+b)/2");
  }
  return out;
}

void LipschitzConstant::validate() const {
  if (!(K > 0.0) || !std::isfinite(K)) throw ParameterError("Lipschitz constant must be > 0");
}

LipschitzReports bound_lipschitz(const ProblemSpec& p, LipschitzConstant L, const QuadratureSettings& s,
                                 int sup_samples) {
  L.validate();
  const double w = p.width();

  std::vector<std::string> warnings;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> pick(p.a(), p.b());
  int broken = 0;
  constexpr int kPairs = 200;
  for (int i = 0; i < kPairs; ++i) {
    const double x = pick(rng), y = pick(rng);
    const double lhs = std::fabs(p.fprime_at(x) - p.fprime_at(y));
    if (lhs > L.K * std::fabs(x - y) * (1.0 + 1e-6) + 1e-9) ++broken;
  }
  if (broken > 0)
    warnings.push_back("f' violates the Lipschitz constant on " + std::to_string(broken) + " of " +
                       std::to_string(kPairs) + " sampled pairs");
  if (!p.g_nonnegative()) warnings.emplace_back("g takes negative values");

  LipschitzReports out;
  out.offset = 0.5 * p.fprime_at(p.midpoint()) * m_integral(p, s);
  const double measured = std::fabs(trapezoid_gap(p, s) / w - out.offset);
  const double weighted_abs = integrate(
      [&](double t) { return std::fabs(t - 0.5) * std::fabs(m_value(p, t, s)); }, 0.0, 0.5, s) +
                              integrate(
      [&](double t) { return std::fabs(t - 0.5) * std::fabs(m_value(p, t, s)); }, 0.5, 1.0, s);
  const double sup = sup_norm([&](double x) { return p.g_at(x); }, p.a(), p.b(), sup_samples);

  out.primary = BoundReport::make("lipschitz", measured, 0.5 * L.K * w * weighted_abs);
  out.sup_form = BoundReport::make("lipschitz_sup", measured, L.K * w * sup / 12.0);
  out.primary.warnings = warnings;
  out.sup_form.warnings = warnings;
  if (!p.g_symmetric()) out.sup_form.warnings.emplace_back("g is not symmetric about (a+b)/2");
  return out;
}

}  // namespace fejer

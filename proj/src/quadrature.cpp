#include "fejer/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "fejer/detail/format.hpp"
#include "fejer/error.hpp"

namespace fejer {

Partition::Partition(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ParameterError("a partition needs at least two points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i])) throw ParameterError("partition points must be finite");
    if (i > 0 && !(points_[i - 1] < points_[i]))
      throw ParameterError("partition points must be strictly increasing (index " + std::to_string(i) + ")");
  }
}

Partition Partition::uniform(double a, double b, int n) {
  if (n < 1) throw ParameterError("uniform partition requires n >= 1");
  if (!(a < b)) throw ParameterError("uniform partition requires a < b");
  std::vector<double> pts(n + 1);
  for (int i = 0; i <= n; ++i) pts[i] = i == n ? b : a + (b - a) * i / n;
  return Partition(std::move(pts));
}

void Partition::bisect(std::size_t i) {
  if (i >= intervals()) throw ParameterError("bisect: interval index out of range");
  const double mid = 0.5 * (points_[i] + points_[i + 1]);
  points_.insert(points_.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
}

namespace {

void require_span(const ProblemSpec& p, const Partition& P) {
  const double scale = 1e-12 * std::max({1.0, std::fabs(p.a()), std::fabs(p.b())});
  if (std::fabs(P.front() - p.a()) > scale || std::fabs(P.back() - p.b()) > scale)
    throw ParameterError("partition spans [" + detail::shortest(P.front()) + ", " +
                         detail::shortest(P.back()) + "] but the problem is on [" +
                         detail::shortest(p.a()) + ", " + detail::shortest(p.b()) + "]");
}

double interval_term(const ProblemSpec& p, const HKernel& h, double lo, double hi,
                     const QuadratureSettings& s) {
  const double delta = hi - lo;
  const double slopes = std::fabs(p.fprime_at(lo)) + std::fabs(p.fprime_at(hi));
  if (slopes == 0.0) return 0.0;
  const double inner = integrate(
      [&](double x) { return p.g_at(x) * h.sum_cumulative(std::clamp((hi - x) / delta, 0.0, 1.0), s); },
      0.5 * (lo + hi), hi, s);
  return delta * slopes * inner;
}

}  // namespace

double trapezoid_weighted(const ProblemSpec& p, const Partition& P, const QuadratureSettings& s) {
  require_span(p, P);
  const auto& x = P.points();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double mass = integrate([&](double t) { return p.g_at(t); }, x[i], x[i + 1], s);
    total += 0.5 * (p.f_at(x[i]) + p.f_at(x[i + 1])) * mass;
  }
  return total;
}

std::vector<double> error_bound_terms(const ProblemSpec& p, const HKernel& h, const Partition& P,
                                      const QuadratureSettings& s) {
  require_span(p, P);
  h.require_integrable(s);
  const auto& x = P.points();
  std::vector<double> terms(P.intervals());
  for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = interval_term(p, h, x[i], x[i + 1], s);
  return terms;
}

double error_bound_h(const ProblemSpec& p, const HKernel& h, const Partition& P,
                     const QuadratureSettings& s) {
  double total = 0.0;
  for (double t : error_bound_terms(p, h, P, s)) total += t;
  return total;
}

double error_bound_power(const ProblemSpec& p, double k, const Partition& P, const QuadratureSettings& s) {
  if (!(k > -1.0) || !std::isfinite(k)) throw ParameterError("power error bound requires k > -1");
  require_span(p, P);
  const auto& x = P.points();
  const double e = k + 1.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double lo = x[i], hi = x[i + 1], delta = hi - lo;
    const double slopes = std::fabs(p.fprime_at(lo)) + std::fabs(p.fprime_at(hi));
    const double inner = integrate(
        [&](double t) {
          return (std::pow((hi - t) / delta, e) - std::pow((t - lo) / delta, e) + 1.0) * p.g_at(t);
        },
        0.5 * (lo + hi), hi, s);
    total += delta * slopes * inner;
  }
  return total / e;
}

double classical_error_bound(const ProblemSpec& p, const Partition& P) {
  require_span(p, P);
  const auto& x = P.points();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double delta = x[i + 1] - x[i];
    total += delta * delta * (std::fabs(p.fprime_at(x[i])) + std::fabs(p.fprime_at(x[i + 1])));
  }
  return total / 8.0;
}

std::vector<std::size_t> asymmetric_intervals(const ProblemSpec& p, const Partition& P) {
  constexpr int kGrid = 51;
  const auto& x = P.points();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double lo = x[i], hi = x[i + 1];
    double sup = 0.0, defect = 0.0;
    for (int j = 0; j < kGrid; ++j) {
      const double t = j == kGrid - 1 ? hi : lo + (hi - lo) * j / (kGrid - 1);
      const double gt = p.g_at(t);
      sup = std::max(sup, std::fabs(gt));
      defect = std::max(defect, std::fabs(gt - p.g_at(lo + hi - t)));
    }
    if (defect > 1e-9 * (1.0 + sup)) out.push_back(i);
  }
  return out;
}

bool QuadResult::certified() const {
  return actual_error <= error_bound + kDefaultReportTol * (1.0 + error_bound);
}

QuadResult run_quadrature(const ProblemSpec& p, const HKernel& h, const Partition& P,
                          const QuadratureSettings& s) {
  QuadResult r;
  r.value = trapezoid_weighted(p, P, s);
  r.error_bound = error_bound_h(p, h, P, s);
  r.reference = integrate([&](double x) { return p.f_at(x) * p.g_at(x); }, p.a(), p.b(), s.tightened(100.0));
  r.actual_error = std::fabs(r.value - r.reference);
  const auto asym = asymmetric_intervals(p, P);
  if (!asym.empty())
    r.warnings.push_back("g is not symmetric about the midpoint of " + std::to_string(asym.size()) +
                         " of " + std::to_string(P.intervals()) +
                         " subintervals; the error bound is not certified there");
  if (!p.g_nonnegative()) r.warnings.emplace_back("g takes negative values");
  return r;
}

RefineResult adaptive_refine(const ProblemSpec& p, const HKernel& h, double tol, int max_intervals,
                             const QuadratureSettings& s) {
  if (!(tol > 0.0)) throw ParameterError("adaptive refinement requires tol > 0");
  if (max_intervals < 2) throw ParameterError("adaptive refinement requires max_intervals >= 2");
  h.require_integrable(s);

  Partition P({p.a(), p.b()});
  std::vector<double> terms{interval_term(p, h, p.a(), p.b(), s)};
  auto total = [&] {
    double t = 0.0;
    for (double v : terms) t += v;
    return t;
  };
  for (;;) {
    const double bound = total();
    if (bound <= tol) return {P, bound, true};
    if (P.intervals() >= static_cast<std::size_t>(max_intervals)) return {P, bound, false};
    const auto worst = static_cast<std::size_t>(
        std::distance(terms.begin(), std::max_element(terms.begin(), terms.end())));
    P.bisect(worst);
    const auto& x = P.points();
    terms[worst] = interval_term(p, h, x[worst], x[worst + 1], s);
    terms.insert(terms.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                 interval_term(p, h, x[worst + 1], x[worst + 2], s));
  }
}

}  // namespace fejer

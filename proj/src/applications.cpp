#include "fejer/applications.hpp"

#include <cmath>

#include "fejer/detail/format.hpp"
#include "fejer/error.hpp"
#include "fejer/hconvexity.hpp"

namespace fejer {

namespace {

bool is_integer(double v) { return std::isfinite(v) && std::trunc(v) == v; }

}  // namespace

double arithmetic_mean(double a, double b) { return 0.5 * (a + b); }

double gen_log_mean_power(double a, double b, double n) {
  if (!(a < b)) throw ParameterError("generalized log-mean requires a < b");
  if (n == -1.0 || n == 0.0) throw ParameterError("generalized log-mean undefined for n = -1 and n = 0");
  if (a <= 0.0 && !is_integer(n))
    throw ParameterError("generalized log-mean with non-integer n requires 0 < a");
  if (a <= 0.0 && b >= 0.0 && n < -1.0)
    throw ParameterError("generalized log-mean with n < -1 requires an interval excluding 0");
  return (std::pow(b, n + 1.0) - std::pow(a, n + 1.0)) / ((n + 1.0) * (b - a));
}

double gen_log_mean(double a, double b, double n) {
  const double p = gen_log_mean_power(a, b, n);
  if (p < 0.0) {
    const bool odd = is_integer(n) && std::fmod(std::fabs(n), 2.0) == 1.0;
    if (!odd) throw ParameterError("generalized log-mean has no real root for these arguments");
    return -std::pow(-p, 1.0 / n);
  }
  return std::pow(p, 1.0 / n);
}

void MeanParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a && a < b))
    throw ParameterError("means require 0 < a < b");
  if (!std::isfinite(n) || n == -1.0 || (n >= 0.0 && n < 1.0))
    throw ParameterError("mean exponent n must lie in (-inf,-1) U (-1,0) U [1,inf)");
  if (!std::isfinite(k) || k > 1.0) throw ParameterError("kernel exponent k must satisfy k <= 1");
  if (k == -1.0 || k == -2.0) throw ParameterError("kernel exponent k must differ from -1 and -2");
  if (k < -1.0) throw NonIntegrableKernelError("a finite means bound requires k > -1");
}

BoundReport means_bound_check(const MeanParams& mp) {
  mp.validate();
  const double a = mp.a, b = mp.b, n = mp.n, k = mp.k;
  const double measured =
      std::fabs(arithmetic_mean(std::pow(a, n), std::pow(b, n)) - gen_log_mean_power(a, b, n));
  const double slopes = arithmetic_mean(std::pow(std::fabs(a), n - 1.0), std::pow(std::fabs(b), n - 1.0));
  const double bound =
      std::fabs(n) * (b - a) / ((k + 1.0) * (k + 2.0)) * slopes * (std::pow(2.0, -k) + k);
  return BoundReport::make("means[n=" + detail::shortest(n) + ",k=" + detail::shortest(k) + "]",
                           measured, bound);
}

double means_corollary_bound(double a, double b, double n) {
  return std::fabs(n) * (b - a) / 4.0 *
         arithmetic_mean(std::pow(std::fabs(a), n - 1.0), std::pow(std::fabs(b), n - 1.0));
}

DensitySpec DensitySpec::make(Expression g, double a, double b, const QuadratureSettings& s) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(0.0 < a && a < b))
    throw ParameterError("a density needs support [a,b] with 0 < a < b");
  DensitySpec d(std::move(g), a, b);

  constexpr int kGrid = kValidationGrid;
  double sup = 0.0, defect = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double x = i == kGrid - 1 ? b : a + (b - a) * i / (kGrid - 1);
    const double gx = d.g_(x);
    if (gx < -1e-12)
      throw NegativityError("density is negative at x=" + detail::shortest(x));
    sup = std::max(sup, std::fabs(gx));
    defect = std::max(defect, std::fabs(gx - d.g_(a + b - x)));
  }
  if (defect > 1e-9 * (1.0 + sup))
    throw SymmetryViolationError("density is not symmetric about (a+b)/2 (defect " +
                                 detail::shortest(defect) + ")");

  d.normalization_defect_ = std::fabs(integrate(d.g_, a, b, s) - 1.0);
  if (d.normalization_defect_ > kDensityTolerance)
    throw ParameterError("not a probability density: |int g - 1| = " +
                         detail::shortest(d.normalization_defect_));
  return d;
}

double DensitySpec::half_mass(const QuadratureSettings& s) const {
  return integrate(g_, a_, 0.5 * (a_ + b_), s);
}

double lambda_moment(const DensitySpec& d, double lambda, const QuadratureSettings& s) {
  return integrate([&](double x) { return std::pow(x, lambda) * d.g()(x); }, d.a(), d.b(), s);
}

BoundReport moment_bound_check(const DensitySpec& d, const Expression& f,
                               const std::optional<Expression>& fprime, const HKernel& h,
                               const QuadratureSettings& s) {
  h.require_integrable(s);
  auto slope = [&](double x) { return fprime ? (*fprime)(x) : numeric_derivative(f, x); };
  const double a = d.a(), b = d.b();
  const double mean_f = integrate([&](double x) { return f(x) * d.g()(x); }, a, b, s);
  const double measured = std::fabs(0.5 * (f(a) + f(b)) - mean_f);
  const double bound =
      0.5 * (b - a) * (std::fabs(slope(a)) + std::fabs(slope(b))) * h.half_interval_integral(s);
  auto r = BoundReport::make("moment[" + h.describe() + "]", measured, bound);
  try {
    const auto hc = check_h_convex([&](double x) { return std::fabs(slope(x)); }, h, a, b, 21);
    if (!hc.passed())
      r.warnings.push_back("|f'| is not " + h.describe() + "-convex on [a,b]: " +
                           std::to_string(hc.violation_count) + " violating triples");
  } catch (const Error& e) {
    r.warnings.push_back(std::string("h-convexity of |f'| not checked: ") + e.what());
  }
  return r;
}

PowerMomentReport power_moment_check(const DensitySpec& d, double lambda, double k,
                                     const QuadratureSettings& s) {
  if (lambda == 0.0 || !std::isfinite(lambda)) throw ParameterError("lambda must be nonzero");
  const std::string l = "(" + detail::shortest(lambda) + ")";
  const std::string lm1 = "(" + detail::shortest(lambda - 1.0) + ")";
  const Expression f = Expression::parse("x^" + l + "/" + l);
  const Expression fprime = Expression::parse("x^" + lm1);
  PowerMomentReport out;
  out.theorem = moment_bound_check(d, f, fprime, HKernel::power(k), s);
  out.display_bound = lambda * (d.b() - d.a()) / (2.0 * (k + 1.0)) *
                      (std::pow(d.a(), lambda - 1.0) + std::pow(d.b(), lambda - 1.0));
  return out;
}

}  // namespace fejer

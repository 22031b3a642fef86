#pragma once

#include <optional>

#include "fejer/expr.hpp"
#include "fejer/integrate.hpp"
#include "fejer/kernel.hpp"
#include "fejer/problem.hpp"

namespace fejer {

// ---- special means -------------------------------------------------------

/// A(a, b) = (a + b)/2.
double arithmetic_mean(double a, double b);

/// L_n(a, b) = [(b^{n+1} - a^{n+1}) / ((n+1)(b-a))]^{1/n}, a < b, n not in {-1, 0}.
double gen_log_mean(double a, double b, double n);

/// L_n(a, b)^n, evaluated without the outer root.
double gen_log_mean_power(double a, double b, double n);

/// Parameters of the power-mean inequality: f(x) = x^n on [a, b] (0 < a < b),
/// kernel h(t) = t^k, weight g == 1.
struct MeanParams {
  double a, b;
  double n;
  double k;

  /// n in (-inf,-1) U (-1,0) U [1,inf); k in (-1, 1] (k <= 1, k != -1, -2, finite bound).
  void validate() const;
};

/// |A(a^n, b^n) - L_n^n(a, b)| <= |n|(b-a)/((k+1)(k+2)) A(|a|^{n-1}, |b|^{n-1}) [2^{-k} + k].
BoundReport means_bound_check(const MeanParams& mp);

/// The k = 1 special case n(b-a)/4 A(|a|^{n-1}, |b|^{n-1}).
double means_corollary_bound(double a, double b, double n);

// ---- moments of a symmetric density ---------------------------------------

inline constexpr double kDensityTolerance = 1e-8;

/// A probability density on [a, b] with 0 < a < b, nonnegative, symmetric
/// about (a+b)/2 and normalised to within 1e-8. Densities are validated,
/// never renormalised.
class DensitySpec {
 public:
  /// Throws ParameterError (NegativityError / SymmetryViolationError for the
  /// respective failures) when any density condition fails.
  static DensitySpec make(Expression g, double a, double b, const QuadratureSettings& s = {});

  const Expression& g() const { return g_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double normalization_defect() const { return normalization_defect_; }
  /// int_a^{(a+b)/2} g, which is 1/2 for a symmetric density.
  double half_mass(const QuadratureSettings& s = {}) const;

 private:
  DensitySpec(Expression g, double a, double b) : g_(std::move(g)), a_(a), b_(b) {}
  Expression g_;
  double a_, b_;
  double normalization_defect_ = 0.0;
};

/// E_lambda(X) = int_a^b x^lambda g(x) dx.
double lambda_moment(const DensitySpec& d, double lambda, const QuadratureSettings& s = {});

/// |(f(a)+f(b))/2 - int f g| <= (b-a)/2 (|f'(a)|+|f'(b)|) S(1/2).
/// An empty fprime selects numeric differentiation.
BoundReport moment_bound_check(const DensitySpec& d, const Expression& f,
                               const std::optional<Expression>& fprime, const HKernel& h,
                               const QuadratureSettings& s = {});

/// f(x) = x^lambda / lambda against h(t) = t^k: the bound from the theorem and
/// the closed-form display lambda (b-a)/(2(k+1)) (a^{lambda-1} + b^{lambda-1}).
/// The two agree at lambda = 1.
struct PowerMomentReport {
  BoundReport theorem;
  double display_bound = 0.0;
};

PowerMomentReport power_moment_check(const DensitySpec& d, double lambda, double k,
                                     const QuadratureSettings& s = {});

}  // namespace fejer

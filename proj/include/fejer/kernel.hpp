#pragma once

#include <string>
#include <variant>

#include "fejer/expr.hpp"
#include "fejer/integrate.hpp"

namespace fejer {

/// The kernel h on [0, 1] of an h-convexity class.
///
///   power(k)     h(t) = t^k      (k = 1 convex, 0 < k <= 1 s-convex, k = -1 Godunova-Levin)
///   constant(c)  h(t) = c        (c = 1 gives P-functions)
///   custom(e)    h(t) = e(t)     the expression variable `x` stands for t
///
/// Construction validates h >= 0 and h != 0 on the open grid t = i/1002,
/// i = 1..1001. Integrability is only demanded by the cumulative integrals.
class HKernel {
 public:
  struct Power {
    double k;
  };
  struct Constant {
    double c;
  };
  struct Custom {
    Expression expr;
  };
  using Variant = std::variant<Power, Constant, Custom>;

  static HKernel power(double k);
  static HKernel constant(double c);
  static HKernel custom(Expression e);

  /// Parses the CLI form `power:K`, `constant:C` or `custom:<expr>`.
  static HKernel parse(const std::string& text);

  const Variant& variant() const { return variant_; }

  /// h(t). Throws DomainError at t = 0 for power kernels with k < 0.
  double operator()(double t) const;

  /// Throws NonIntegrableKernelError unless h is integrable on (0, 1).
  void require_integrable(const QuadratureSettings& s = {}) const;

  /// S(u) = int_0^u [h(t) + h(1-t)] dt, u in [0, 1].
  double sum_cumulative(double u, const QuadratureSettings& s = {}) const;

  /// S(1/2); 1/(k+1) for power kernels.
  double half_interval_integral(const QuadratureSettings& s = {}) const { return sum_cumulative(0.5, s); }

  /// Short label such as "power:0.5".
  std::string describe() const;

 private:
  explicit HKernel(Variant v);
  Variant variant_;
};

inline double kernel_value(const HKernel& h, double t) { return h(t); }

inline double kernel_sum_cumulative(const HKernel& h, double u, const QuadratureSettings& s = {}) {
  return h.sum_cumulative(u, s);
}

inline double half_interval_kernel_integral(const HKernel& h, const QuadratureSettings& s = {}) {
  return h.half_interval_integral(s);
}

}  // namespace fejer

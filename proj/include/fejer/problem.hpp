#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fejer/expr.hpp"

namespace fejer {

inline constexpr int kValidationGrid = 501;
inline constexpr int kDefaultSupSamples = 1001;
inline constexpr double kDefaultReportTol = 1e-8;

/// The data (f, f', g, [a, b]) of one trapezoidal-gap problem.
///
/// Symmetry and nonnegativity of g are measured on a 501-point grid when the
/// problem is built and stored as flags; operations that need them check the
/// flags. When f' is not supplied it is replaced by a central difference.
class ProblemSpec {
 public:
  /// symmetry_tol < 0 selects the default 1e-9 * (1 + sup|g|).
  /// Throws ParameterError unless a < b (both finite).
  static ProblemSpec make(Expression f, std::optional<Expression> fprime, Expression g, double a,
                          double b, double symmetry_tol = -1.0);

  /// Convenience: parses the three expressions; empty fprime selects numeric differentiation.
  static ProblemSpec parse(const std::string& f, const std::string& fprime, const std::string& g,
                           double a, double b);

  const Expression& f() const { return f_; }
  const std::optional<Expression>& fprime() const { return fprime_; }
  const Expression& g() const { return g_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double width() const { return b_ - a_; }
  double midpoint() const { return 0.5 * (a_ + b_); }

  bool g_symmetric() const { return g_symmetric_; }
  bool g_nonnegative() const { return g_nonnegative_; }
  double symmetry_defect() const { return symmetry_defect_; }
  double symmetry_tol() const { return symmetry_tol_; }

  double f_at(double x) const { return f_(x); }
  double g_at(double x) const { return g_(x); }
  /// f'(x), analytic when supplied, central difference otherwise.
  double fprime_at(double x) const;
  /// The weight on the normalised parameter: s -> g(s a + (1 - s) b).
  double g_param(double s) const { return g_(s * a_ + (1.0 - s) * b_); }

  /// |f'(a)| + |f'(b)|.
  double endpoint_slope_sum() const;

 private:
  ProblemSpec(Expression f, std::optional<Expression> fprime, Expression g, double a, double b)
      : f_(std::move(f)), fprime_(std::move(fprime)), g_(std::move(g)), a_(a), b_(b) {}

  Expression f_;
  std::optional<Expression> fprime_;
  Expression g_;
  double a_, b_;
  bool g_symmetric_ = false;
  bool g_nonnegative_ = false;
  double symmetry_defect_ = 0.0;
  double symmetry_tol_ = 0.0;
};

/// One inequality check: measured left side against computed right side.
struct BoundReport {
  std::string label;
  double measured = 0.0;
  double bound = 0.0;
  double slack = 0.0;  // bound - measured
  bool satisfied = false;
  double report_tol = 0.0;
  std::vector<std::string> warnings;

  /// report_tol = tol_scale * (1 + |bound|); satisfied iff slack >= -report_tol.
  static BoundReport make(std::string label, double measured, double bound,
                          double tol_scale = kDefaultReportTol);
};

}  // namespace fejer

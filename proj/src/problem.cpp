#include "fejer/problem.hpp"

#include <algorithm>
#include <cmath>

#include "fejer/error.hpp"

namespace fejer {

ProblemSpec ProblemSpec::make(Expression f, std::optional<Expression> fprime, Expression g, double a,
                              double b, double symmetry_tol) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw ParameterError("interval endpoints must be finite");
  if (!(a < b)) throw ParameterError("interval requires a < b");

  ProblemSpec p(std::move(f), std::move(fprime), std::move(g), a, b);

  double sup = 0.0;
  double min_g = 0.0;
  double defect = 0.0;
  for (int i = 0; i < kValidationGrid; ++i) {
    const double x = i == kValidationGrid - 1 ? b : a + (b - a) * i / (kValidationGrid - 1);
    const double gx = p.g_(x);
    const double mirrored = p.g_(a + b - x);
    sup = std::max(sup, std::fabs(gx));
    min_g = std::min(min_g, gx);
    defect = std::max(defect, std::fabs(gx - mirrored));
  }
  p.symmetry_tol_ = symmetry_tol >= 0.0 ? symmetry_tol : 1e-9 * (1.0 + sup);
  p.symmetry_defect_ = defect;
  p.g_symmetric_ = defect <= p.symmetry_tol_;
  p.g_nonnegative_ = min_g >= -1e-12;
  return p;
}

ProblemSpec ProblemSpec::parse(const std::string& f, const std::string& fprime, const std::string& g,
                               double a, double b) {
  std::optional<Expression> d;
  if (!fprime.empty()) d = Expression::parse(fprime);
  return make(Expression::parse(f), std::move(d), Expression::parse(g), a, b);
}

double ProblemSpec::fprime_at(double x) const {
  return fprime_ ? (*fprime_)(x) : numeric_derivative(f_, x);
}

double ProblemSpec::endpoint_slope_sum() const {
  return std::fabs(fprime_at(a_)) + std::fabs(fprime_at(b_));
}

BoundReport BoundReport::make(std::string label, double measured, double bound, double tol_scale) {
  BoundReport r;
  r.label = std::move(label);
  r.measured = measured;
  r.bound = bound;
  r.slack = bound - measured;
  r.report_tol = tol_scale * (1.0 + std::fabs(bound));
  r.satisfied = r.slack >= -r.report_tol;
  return r;
}

}  // namespace fejer

#pragma once

#include <string>
#include <vector>

#include "fejer/integrate.hpp"
#include "fejer/kernel.hpp"
#include "fejer/problem.hpp"

namespace fejer {

/// Breakpoints a = x_0 < x_1 < ... < x_n = b, n >= 1.
class Partition {
 public:
  /// Throws ParameterError unless the points are finite and strictly increasing (at least two).
  explicit Partition(std::vector<double> points);

  static Partition uniform(double a, double b, int n);

  const std::vector<double>& points() const { return points_; }
  std::size_t intervals() const { return points_.size() - 1; }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }

  /// Splits interval i at its midpoint.
  void bisect(std::size_t i);

 private:
  std::vector<double> points_;
};

inline Partition uniform_partition(double a, double b, int n) { return Partition::uniform(a, b, n); }

/// T(f, g, P) = sum_i (f(x_i) + f(x_{i+1}))/2 int_{x_i}^{x_{i+1}} g.
/// Throws ParameterError when P does not span [p.a, p.b].
double trapezoid_weighted(const ProblemSpec& p, const Partition& P, const QuadratureSettings& s = {});

/// The per-interval terms of the a-priori bound
///   Delta_i (|f'(x_i)| + |f'(x_{i+1})|) int_{m_i}^{x_{i+1}} g(x) S((x_{i+1} - x)/Delta_i) dx.
std::vector<double> error_bound_terms(const ProblemSpec& p, const HKernel& h, const Partition& P,
                                      const QuadratureSettings& s = {});

/// Sum of error_bound_terms.
double error_bound_h(const ProblemSpec& p, const HKernel& h, const Partition& P,
                     const QuadratureSettings& s = {});

/// The same bound for h(t) = t^k written out as
///   1/(k+1) sum_i Delta_i (|f'(x_i)|+|f'(x_{i+1})|)
///     int_{m_i}^{x_{i+1}} [((x_{i+1}-x)/Delta_i)^{k+1} - ((x-x_i)/Delta_i)^{k+1} + 1] g(x) dx.
/// Throws ParameterError unless k > -1.
double error_bound_power(const ProblemSpec& p, double k, const Partition& P,
                         const QuadratureSettings& s = {});

/// (1/8) sum Delta_i^2 (|f'(x_i)| + |f'(x_{i+1})|).
double classical_error_bound(const ProblemSpec& p, const Partition& P);

/// Indices of intervals on which g is not symmetric about the interval midpoint
/// (checked on a 51-point grid per interval).
std::vector<std::size_t> asymmetric_intervals(const ProblemSpec& p, const Partition& P);

struct QuadResult {
  double value = 0.0;        // T(f, g, P)
  double error_bound = 0.0;  // a-priori bound on |E(f, g, P)|
  double reference = 0.0;    // int f g at 100x tighter tolerances
  double actual_error = 0.0; // |value - reference|
  std::vector<std::string> warnings;

  /// actual_error <= error_bound + 1e-8 (1 + error_bound).
  bool certified() const;
};

QuadResult run_quadrature(const ProblemSpec& p, const HKernel& h, const Partition& P,
                          const QuadratureSettings& s = {});

struct RefineResult {
  Partition partition;
  double error_bound;
  bool converged;
};

/// Greedy refinement from {a, b}: bisect the interval with the largest bound
/// term (leftmost on ties) until the total bound is <= tol or the partition
/// has max_intervals intervals.
RefineResult adaptive_refine(const ProblemSpec& p, const HKernel& h, double tol, int max_intervals,
                             const QuadratureSettings& s = {});

}  // namespace fejer

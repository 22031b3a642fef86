#pragma once

#include <functional>

namespace fejer {

using ScalarFunction = std::function<double(double)>;

struct QuadratureSettings {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 50;

  /// Throws ParameterError unless abs_tol > 0, rel_tol >= 0, max_depth >= 1.
  void validate() const;

  /// Same settings with both tolerances divided by `factor`.
  QuadratureSettings tightened(double factor) const;
};

/// Adaptive Gauss-Kronrod (7/15) integral of f over [a, b], a <= b.
///
/// Subintervals are bisected until |K15 - G7| <= max(abs_tol, rel_tol * |K15|)
/// locally. The outer interval is mapped through the cubic x = a + (b-a)(3u^2 - 2u^3)
/// so the engine never evaluates f at a or b and algebraic endpoint
/// singularities such as t^(-1/2) become smooth. A degenerate interval gives 0.
///
/// Throws DepthExhaustedError (carrying the worst subinterval, in x) and
/// propagates DomainError from f.
double integrate(const ScalarFunction& f, double a, double b, const QuadratureSettings& s = {});

/// max |g| over `samples` equally spaced points of [a, b], endpoints included.
/// A grid approximation, hence a lower bound of the true supremum.
double sup_norm(const ScalarFunction& g, double a, double b, int samples);

/// (int_0^1 |g_param(s)|^q ds)^(1/q) for q >= 1, where g_param is the
/// weight expressed on the normalised parameter s in [0, 1].
double q_norm(const ScalarFunction& g_param, double q, const QuadratureSettings& s = {});

}  // namespace fejer

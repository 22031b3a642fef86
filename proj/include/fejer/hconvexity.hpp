#pragma once

#include <cstddef>
#include <vector>

#include "fejer/integrate.hpp"
#include "fejer/kernel.hpp"

namespace fejer {

struct ConvexityViolation {
  double x, y, lambda;
  double lhs;  // phi(lambda x + (1 - lambda) y)
  double rhs;  // h(lambda) phi(x) + h(1 - lambda) phi(y)
};

/// Result of a sampling check of phi(lambda x + (1-lambda) y) <= h(lambda) phi(x) + h(1-lambda) phi(y).
///
/// This is a falsifier: zero violations means "not refuted at this grid
/// resolution", never a proof.
struct ConvexityReport {
  std::size_t checked_triples = 0;
  std::size_t violation_count = 0;
  /// The worst violations, largest lhs - rhs first, at most kMaxListed.
  std::vector<ConvexityViolation> violations;
  double max_violation = 0.0;
  double tolerance = 0.0;

  static constexpr std::size_t kMaxListed = 20;
  bool passed() const { return violation_count == 0; }
};

/// Checks h-convexity of phi on [a, b] over all triples with x, y on a
/// `grid`-point uniform grid (endpoints included) and lambda = i/(grid+1),
/// i = 1..grid. A triple violates when lhs > rhs + tolerance.
///
/// hc_tol < 0 selects the default 1e-9 * (1 + max grid |phi|).
/// Throws NegativityError if phi < -1e-12 at a grid point, ParameterError if grid < 3.
ConvexityReport check_h_convex(const ScalarFunction& phi, const HKernel& h, double a, double b,
                               int grid, double hc_tol = -1.0);

}  // namespace fejer

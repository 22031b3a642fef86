#include "fejer/hconvexity.hpp"

#include <algorithm>
#include <cmath>

#include "fejer/detail/format.hpp"
#include "fejer/error.hpp"

namespace fejer {

ConvexityReport check_h_convex(const ScalarFunction& phi, const HKernel& h, double a, double b,
                               int grid, double hc_tol) {
  if (grid < 3) throw ParameterError("h-convexity check requires grid >= 3");
  if (!(a < b)) throw ParameterError("h-convexity check requires a < b");

  std::vector<double> xs(grid), values(grid);
  double scale = 0.0;
  for (int i = 0; i < grid; ++i) {
    xs[i] = i == grid - 1 ? b : a + (b - a) * i / (grid - 1);
    values[i] = phi(xs[i]);
    if (values[i] < -1e-12)
      throw NegativityError("h-convexity is defined for nonnegative functions; phi(" +
                            detail::shortest(xs[i]) + ") = " + detail::shortest(values[i]));
    scale = std::max(scale, std::fabs(values[i]));
  }

  std::vector<double> lambdas(grid), h_lo(grid), h_hi(grid);
  for (int i = 0; i < grid; ++i) {
    lambdas[i] = static_cast<double>(i + 1) / (grid + 1);
    h_lo[i] = h(lambdas[i]);
    h_hi[i] = h(1.0 - lambdas[i]);
  }

  ConvexityReport report;
  report.tolerance = hc_tol >= 0.0 ? hc_tol : 1e-9 * (1.0 + scale);
  for (int ix = 0; ix < grid; ++ix) {
    for (int iy = 0; iy < grid; ++iy) {
      for (int il = 0; il < grid; ++il) {
        const double lambda = lambdas[il];
        const double lhs = phi(lambda * xs[ix] + (1.0 - lambda) * xs[iy]);
        const double rhs = h_lo[il] * values[ix] + h_hi[il] * values[iy];
        ++report.checked_triples;
        if (lhs > rhs + report.tolerance) {
          ++report.violation_count;
          report.max_violation = std::max(report.max_violation, lhs - rhs);
          report.violations.push_back({xs[ix], xs[iy], lambda, lhs, rhs});
        }
      }
    }
  }

  auto worse = [](const ConvexityViolation& l, const ConvexityViolation& r) {
    return l.lhs - l.rhs > r.lhs - r.rhs;
  };
  if (report.violations.size() > ConvexityReport::kMaxListed) {
    std::partial_sort(report.violations.begin(),
                      report.violations.begin() + ConvexityReport::kMaxListed,
                      report.violations.end(), worse);
    report.violations.resize(ConvexityReport::kMaxListed);
  } else {
    std::stable_sort(report.violations.begin(), report.violations.end(), worse);
  }
  return report;
}

}  // namespace fejer

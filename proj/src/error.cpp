#include "fejer/error.hpp"

#include "fejer/detail/format.hpp"

namespace fejer {

std::string DomainError::format(double v) { return detail::shortest(v); }

DepthExhaustedError::DepthExhaustedError(double lo, double hi, double error_estimate)
    : Error("integration depth exhausted on [" + detail::shortest(lo) + ", " + detail::shortest(hi) +
            "] with error estimate " + detail::shortest(error_estimate)),
      lo_(lo),
      hi_(hi),
      error_estimate_(error_estimate) {}

}  // namespace fejer

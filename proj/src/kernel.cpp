#include "fejer/kernel.hpp"

#include <charconv>
#include <cmath>

#include "fejer/detail/format.hpp"
#include "fejer/error.hpp"

namespace fejer {

namespace {

constexpr int kValidationPoints = 1001;

double parse_number(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ParameterError("invalid " + what + " '" + text + "'");
  return v;
}

using detail::shortest;

}  // namespace

HKernel::HKernel(Variant v) : variant_(std::move(v)) {
  bool positive = false;
  for (int i = 1; i <= kValidationPoints; ++i) {
    const double t = static_cast<double>(i) / (kValidationPoints + 1);
    const double value = (*this)(t);
    if (value < 0.0)
      throw NegativityError("kernel " + describe() + " is negative at t=" + shortest(t));
    positive = positive || value > 0.0;
  }
  if (!positive) throw ParameterError("kernel " + describe() + " vanishes identically");
}

HKernel HKernel::power(double k) {
  if (!std::isfinite(k)) throw ParameterError("power kernel exponent must be finite");
  return HKernel(Power{k});
}

HKernel HKernel::constant(double c) {
  if (!std::isfinite(c)) throw ParameterError("constant kernel value must be finite");
  return HKernel(Constant{c});
}

HKernel HKernel::custom(Expression e) { return HKernel(Custom{std::move(e)}); }

HKernel HKernel::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParameterError("kernel '" + text + "' must look like power:K, constant:C or custom:<expr>");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "power") return power(parse_number(arg, "power exponent"));
  if (kind == "constant") return constant(parse_number(arg, "constant value"));
  if (kind == "custom") return custom(Expression::parse(arg));
  throw ParameterError("unknown kernel kind '" + kind + "'");
}

double HKernel::operator()(double t) const {
  return std::visit(
      [t](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Power>) {
          if (t == 0.0 && v.k < 0.0)
            throw DomainError("t^" + shortest(v.k), t, "power kernel with negative exponent at 0");
          return std::pow(t, v.k);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return v.c;
        } else {
          return v.expr(t);
        }
      },
      variant_);
}

void HKernel::require_integrable(const QuadratureSettings& s) const {
  if (const auto* p = std::get_if<Power>(&variant_)) {
    if (p->k <= -1.0)
      throw NonIntegrableKernelError("kernel t^" + shortest(p->k) +
                                     " is not integrable on (0,1): exponent must exceed -1");
    return;
  }
  if (const auto* c = std::get_if<Custom>(&variant_)) {
    try {
      integrate(c->expr, 0.0, 1.0, s);
    } catch (const DepthExhaustedError&) {
      throw NonIntegrableKernelError("custom kernel " + c->expr.to_string() +
                                     " could not be integrated on (0,1)");
    }
  }
}

double HKernel::sum_cumulative(double u, const QuadratureSettings& s) const {
  if (!(u >= 0.0 && u <= 1.0)) throw ParameterError("cumulative kernel integral requires u in [0,1]");
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Power>) {
          require_integrable(s);
          const double e = v.k + 1.0;
          return (std::pow(u, e) + 1.0 - std::pow(1.0 - u, e)) / e;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return 2.0 * v.c * u;
        } else {
          try {
            return integrate([&](double t) { return v.expr(t) + v.expr(1.0 - t); }, 0.0, u, s);
          } catch (const DepthExhaustedError&) {
            throw NonIntegrableKernelError("custom kernel " + v.expr.to_string() +
                                           " could not be integrated on (0," + shortest(u) + ")");
          }
        }
      },
      variant_);
}

std::string HKernel::describe() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Power>) {
          return "power:" + shortest(v.k);
        } else if constexpr (std::is_same_v<T, Constant>) {
          return "constant:" + shortest(v.c);
        } else {
          return "custom:" + v.expr.to_string();
        }
      },
      variant_);
}

}  // namespace fejer

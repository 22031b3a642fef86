#include "fejer/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "fejer/error.hpp"

namespace fejer {

void QuadratureSettings::validate() const {
  if (!(abs_tol > 0.0)) throw ParameterError("abs_tol must be > 0");
  if (!(rel_tol >= 0.0)) throw ParameterError("rel_tol must be >= 0");
  if (max_depth < 1) throw ParameterError("max_depth must be >= 1");
}

QuadratureSettings QuadratureSettings::tightened(double factor) const {
  QuadratureSettings t = *this;
  t.abs_tol /= factor;
  t.rel_tol /= factor;
  return t;
}

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// The first pass splits [0, 1] into this many panels so that a single
// Gauss-Kronrod estimate cannot certify a function it barely resolves.
constexpr int kInitialPanels = 8;

struct Estimate {
  double value, error;
};

struct Panel {
  double lo, hi;
  int depth;
  Estimate whole;  // Gauss-Kronrod estimate over [lo, hi]
};

template <class F>
Estimate gauss_kronrod(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::fabs(kronrod - gauss)};
}

}  // namespace

double integrate(const ScalarFunction& f, double a, double b, const QuadratureSettings& s) {
  s.validate();
  if (!(a <= b)) throw ParameterError("integrate requires a <= b");
  if (a == b) return 0.0;

  const double width = b - a;
  auto mapped = [&](double u) {
    double x = a + width * (u * u * (3.0 - 2.0 * u));
    if (x <= a) x = std::nextafter(a, b);
    if (x >= b) x = std::nextafter(b, a);
    return f(x) * width * 6.0 * u * (1.0 - u);
  };
  auto to_x = [&](double u) { return a + width * (u * u * (3.0 - 2.0 * u)); };

  // Gauss nodes never touch a panel's ends, so a function that is exactly zero
  // at every node can still be nonzero on a sliver next to an end. Interior
  // panel ends are therefore compared against their nearest node.
  auto support_edge = [&](double lo, double hi) {
    auto differs = [&](double end, double node) { return (mapped(end) == 0.0) != (mapped(node) == 0.0); };
    const double inset = 0.25 * (hi - lo) * (1.0 - kNodes[0]);  // outermost node of either half
    return (lo > 0.0 && differs(lo, lo + inset)) || (hi < 1.0 && differs(hi, hi - inset));
  };

  // A panel is accepted when the Kronrod-Gauss difference on both halves and
  // the change from the whole-panel estimate to the sum of the halves are all
  // within tolerance. The second test catches kinks on which K15 and G7 agree
  // by accident.
  std::vector<Panel> stack;
  for (int i = kInitialPanels - 1; i >= 0; --i) {
    const double lo = static_cast<double>(i) / kInitialPanels, hi = static_cast<double>(i + 1) / kInitialPanels;
    stack.push_back({lo, hi, 0, gauss_kronrod(mapped, lo, hi)});
  }
  double total = 0.0;
  double worst_error = -1.0;
  Panel worst{};
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const Estimate left = gauss_kronrod(mapped, p.lo, mid);
    const Estimate right = gauss_kronrod(mapped, mid, p.hi);
    const double value = left.value + right.value;
    const double error = std::max(std::fabs(value - p.whole.value), left.error + right.error);
    if (error <= std::max(s.abs_tol, s.rel_tol * std::fabs(value)) && !support_edge(p.lo, p.hi)) {
      total += value;
      continue;
    }
    if (p.depth >= s.max_depth) {
      if (error > worst_error) {
        worst_error = error;
        worst = p;
      }
      total += value;
      continue;
    }
    stack.push_back({mid, p.hi, p.depth + 1, right});
    stack.push_back({p.lo, mid, p.depth + 1, left});
  }
  if (worst_error >= 0.0) throw DepthExhaustedError(to_x(worst.lo), to_x(worst.hi), worst_error);
  return total;
}

double sup_norm(const ScalarFunction& g, double a, double b, int samples) {
  if (samples < 2) throw ParameterError("sup_norm requires samples >= 2");
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = i == samples - 1 ? b : a + (b - a) * i / (samples - 1);
    best = std::max(best, std::fabs(g(x)));
  }
  return best;
}

double q_norm(const ScalarFunction& g_param, double q, const QuadratureSettings& s) {
  if (!(q >= 1.0)) throw ParameterError("q_norm requires q >= 1");
  const double integral =
      integrate([&](double t) { return std::pow(std::fabs(g_param(t)), q); }, 0.0, 1.0, s);
  return std::pow(integral, 1.0 / q);
}

}  // namespace fejer

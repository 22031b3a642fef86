#pragma once

// Reference computations used only by the tests. They share no code with the
// library: fixed composite Gauss-Legendre rules on known breakpoints instead
// of adaptive Gauss-Kronrod, and brute-force integrals instead of closed forms.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

/// Composite 8-point Gauss-Legendre rule on `panels` equal panels.
inline double gauss_legendre(const Fn& f, double a, double b, int panels = 400) {
  static constexpr std::array<double, 4> x = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                              0.9602898564975363};
  static constexpr std::array<double, 4> w = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                              0.1012285362903763};
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double c = a + (i + 0.5) * h, r = 0.5 * h;
    for (std::size_t j = 0; j < x.size(); ++j) sum += w[j] * r * (f(c - r * x[j]) + f(c + r * x[j]));
  }
  return sum;
}

/// Integral over [a, b] of a function that behaves like (x - a)^p near a, for
/// any p > -1: substitutes x = a + (b - a) v^4.
inline double gauss_legendre_power_left(const Fn& f, double a, double b, int panels = 100) {
  const double L = b - a;
  return gauss_legendre([&](double v) { return 4.0 * L * v * v * v * f(a + L * v * v * v * v); }, 0.0, 1.0,
                        panels);
}

/// Kept for the kernel tests: x^(-1/2)-type singularity at a.
inline double gauss_legendre_sqrt_singular(const Fn& f, double a, double b, int panels = 400) {
  return gauss_legendre([&](double v) { return 2.0 * (b - a) * v * f(a + (b - a) * v * v); }, 0.0, 1.0, panels);
}

/// Plain composite rule applied separately between consecutive breakpoints
/// (points outside (a, b) are ignored).
inline double piecewise(const Fn& f, double a, double b, std::vector<double> breaks, int panels = 200) {
  std::vector<double> pts{a};
  std::sort(breaks.begin(), breaks.end());
  for (double x : breaks)
    if (x > a && x < b) pts.push_back(x);
  pts.push_back(b);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) sum += gauss_legendre(f, pts[i], pts[i + 1], panels);
  return sum;
}

/// M(t) straight from its definition; `kinks` are x-locations where g is not smooth.
inline double m_value(const Fn& g, double a, double b, double t, const std::vector<double>& kinks = {}) {
  auto gp = [&](double s) { return g(s * a + (1.0 - s) * b); };
  std::vector<double> s_kinks;
  for (double x : kinks) s_kinks.push_back((b - x) / (b - a));
  return piecewise(gp, t, 1.0, s_kinks) - piecewise(gp, 0.0, t, s_kinks);
}

/// (f(a) + f(b))/2 * int g - int f g.
inline double trapezoid_gap(const Fn& f, const Fn& g, double a, double b, const std::vector<double>& kinks = {}) {
  const double mass = piecewise(g, a, b, kinks);
  return 0.5 * (f(a) + f(b)) * mass - piecewise([&](double x) { return f(x) * g(x); }, a, b, kinks);
}

/// (b - a)(|f'(a)| + |f'(b)|) int_a^{(a+b)/2} g(x) S((x - a)/(b - a)) dx with
/// S(u) = int_0^u [h(t) + h(1 - t)] dt, everything evaluated by brute force.
/// h may behave like t^k (k > -1) at 0.
inline double h_convex_bound(const Fn& fprime, const Fn& g, const Fn& h, double a, double b,
                             const std::vector<double>& kinks = {}) {
  auto S = [&](double u) {
    if (u <= 0.0) return 0.0;
    return gauss_legendre_power_left([&](double t) { return h(t) + h(1.0 - t); }, 0.0, u, 12);
  };
  const double w = b - a, m = 0.5 * (a + b);
  auto integrand = [&](double x) { return g(x) * S((x - a) / w); };
  double first = m;
  for (double x : kinks)
    if (x > a && x < first) first = x;
  const double inner =
      gauss_legendre_power_left(integrand, a, first, 40) + piecewise(integrand, first, m, kinks, 40);
  return w * (std::fabs(fprime(a)) + std::fabs(fprime(b))) * inner;
}

/// (1/8) sum dx_i^2 (|f'(x_i)| + |f'(x_{i+1})|).
inline double classical_composite_bound(const Fn& fprime, const std::vector<double>& pts) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double d = pts[i + 1] - pts[i];
    sum += d * d * (std::fabs(fprime(pts[i])) + std::fabs(fprime(pts[i + 1])));
  }
  return sum / 8.0;
}

}  // namespace oracle

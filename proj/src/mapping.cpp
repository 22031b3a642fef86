#include "fejer/mapping.hpp"

#include <algorithm>
#include <cmath>

#include "fejer/error.hpp"

namespace fejer {

namespace {

void require_unit(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterError("M(t) requires t in [0,1]");
}

void require_grid(int grid) {
  if (grid < 2) throw ParameterError("grid must have at least 2 points");
}

void require_symmetric(const ProblemSpec& p, const char* what) {
  if (!p.g_symmetric())
    throw SymmetryViolationError(std::string(what) + " requires g symmetric about (a+b)/2");
}

double grid_point(int i, int grid) { return i == grid - 1 ? 1.0 : static_cast<double>(i) / (grid - 1); }

double integrate_param(const ProblemSpec& p, double lo, double hi, const QuadratureSettings& s) {
  return integrate([&](double u) { return p.g_param(u); }, lo, hi, s);
}

/// int_0^1 F(t) dt split at t = 1/2, where M changes sign for symmetric weights.
template <class F>
double integrate_halves(const F& f, const QuadratureSettings& s) {
  return integrate(f, 0.0, 0.5, s) + integrate(f, 0.5, 1.0, s);
}

}  // namespace

double m_value(const ProblemSpec& p, double t, const QuadratureSettings& s) {
  require_unit(t);
  return integrate_param(p, t, 1.0, s) - integrate_param(p, 0.0, t, s);
}

double m_symmetric_form(const ProblemSpec& p, double t, const QuadratureSettings& s) {
  require_unit(t);
  require_symmetric(p, "the symmetric form of M");
  if (t <= 0.5) return 2.0 * integrate_param(p, t, 0.5, s);
  return -2.0 * integrate_param(p, 0.5, t, s);
}

double m_antisymmetry_defect(const ProblemSpec& p, int grid, const QuadratureSettings& s) {
  require_grid(grid);
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = grid_point(i, grid);
    worst = std::max(worst, std::fabs(m_value(p, t, s) + m_value(p, 1.0 - t, s)));
  }
  return worst;
}

double m_symmetric_form_defect(const ProblemSpec& p, int grid, const QuadratureSettings& s) {
  require_grid(grid);
  require_symmetric(p, "the symmetric form of M");
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = grid_point(i, grid);
    worst = std::max(worst, std::fabs(m_value(p, t, s) - m_symmetric_form(p, t, s)));
  }
  return worst;
}

double m_sign_violation(const ProblemSpec& p, int grid, const QuadratureSettings& s) {
  require_grid(grid);
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double t = grid_point(i, grid);
    const double m = m_value(p, t, s);
    if (t <= 0.5) worst = std::max(worst, -m);
    if (t >= 0.5) worst = std::max(worst, m);
  }
  return worst;
}

double m_integral(const ProblemSpec& p, const QuadratureSettings& s) {
  return integrate_halves([&](double t) { return m_value(p, t, s); }, s);
}

double m_abs_integral(const ProblemSpec& p, const QuadratureSettings& s) {
  return integrate_halves([&](double t) { return std::fabs(m_value(p, t, s)); }, s);
}

BoundReport m_bound_sup(const ProblemSpec& p, const QuadratureSettings& s, int sup_samples) {
  const double sup = sup_norm([&](double x) { return p.g_at(x); }, p.a(), p.b(), sup_samples);
  auto r = BoundReport::make("lemma_iv_sup", m_abs_integral(p, s), 0.5 * sup);
  if (!p.g_symmetric()) r.warnings.emplace_back("g is not symmetric about (a+b)/2");
  if (!p.g_nonnegative()) r.warnings.emplace_back("g takes negative values");
  return r;
}

void ConjugateExponents::validate() const {
  if (!(p > 1.0) || !(q > 1.0)) throw ParameterError("conjugate exponents require p > 1 and q > 1");
  if (std::fabs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
    throw ParameterError("exponents are not conjugate: 1/p + 1/q != 1");
}

ConjugateExponents ConjugateExponents::from_p(double p) {
  ConjugateExponents c{p, p / (p - 1.0)};
  c.validate();
  return c;
}

double holder_factor(double p) { return std::pow(0.5, 1.0 / p) * p / (p + 1.0); }

BoundReport m_bound_holder(const ProblemSpec& p, ConjugateExponents pq, const QuadratureSettings& s) {
  pq.validate();
  const double gq = q_norm([&](double u) { return p.g_param(u); }, pq.q, s);
  auto r = BoundReport::make("lemma_iv_holder", m_abs_integral(p, s), 2.0 * gq * holder_factor(pq.p));
  if (!p.g_symmetric()) r.warnings.emplace_back("g is not symmetric about (a+b)/2");
  return r;
}

double trapezoid_gap(const ProblemSpec& p, const QuadratureSettings& s) {
  const double mass = integrate([&](double x) { return p.g_at(x); }, p.a(), p.b(), s);
  const double weighted = integrate([&](double x) { return p.f_at(x) * p.g_at(x); }, p.a(), p.b(), s);
  return 0.5 * (p.f_at(p.a()) + p.f_at(p.b())) * mass - weighted;
}

double lemma_identity_defect(const ProblemSpec& p, const QuadratureSettings& s) {
  const double a = p.a(), b = p.b();
  const double kernel_side = integrate_halves(
      [&](double t) { return m_value(p, t, s) * p.fprime_at(t * a + (1.0 - t) * b); }, s);
  return std::fabs(trapezoid_gap(p, s) - 0.5 * p.width() * p.width() * kernel_side);
}

double mirrored_identity_defect(const ProblemSpec& p, const QuadratureSettings& s) {
  const double a = p.a(), b = p.b();
  const double kernel_side = integrate_halves(
      [&](double t) { return m_value(p, 1.0 - t, s) * p.fprime_at(t * b + (1.0 - t) * a); }, s);
  return std::fabs(trapezoid_gap(p, s) - 0.5 * p.width() * p.width() * kernel_side);
}

}  // namespace fejer

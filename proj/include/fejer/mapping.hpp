#pragma once

#include "fejer/integrate.hpp"
#include "fejer/problem.hpp"

namespace fejer {

// The mapping M on [0, 1] attached to a weight g on [a, b]:
//
//   M(t) = int_t^1 g(sa + (1-s)b) ds - int_0^t g(sa + (1-s)b) ds
//
// and the properties it satisfies. Everything here works in the normalised
// s-domain.

double m_value(const ProblemSpec& p, double t, const QuadratureSettings& s = {});

/// Piecewise form valid for symmetric g:
///   2 int_t^{1/2} g_param  (t <= 1/2),   -2 int_{1/2}^t g_param  (t >= 1/2).
/// Throws SymmetryViolationError when g is not symmetric.
double m_symmetric_form(const ProblemSpec& p, double t, const QuadratureSettings& s = {});

/// max over t_i = i/(grid-1) of |M(t_i) + M(1 - t_i)|. Computed for any g; the
/// identity M(t) + M(1-t) = 0 is only guaranteed for symmetric g.
double m_antisymmetry_defect(const ProblemSpec& p, int grid, const QuadratureSettings& s = {});

/// max over the grid of |m_value - m_symmetric_form|. Requires symmetric g.
double m_symmetric_form_defect(const ProblemSpec& p, int grid, const QuadratureSettings& s = {});

/// Largest violation of the sign pattern M >= 0 on [0, 1/2], M <= 0 on [1/2, 1];
/// zero when the pattern holds on the grid.
double m_sign_violation(const ProblemSpec& p, int grid, const QuadratureSettings& s = {});

/// int_0^1 M(t) dt; vanishes for symmetric g.
double m_integral(const ProblemSpec& p, const QuadratureSettings& s = {});

/// int_0^1 |M(t)| dt.
double m_abs_integral(const ProblemSpec& p, const QuadratureSettings& s = {});

/// Checks int_0^1 |M| <= ||g||_inf / 2 with ||g||_inf from a sup_samples grid.
/// Hypothesis failures (asymmetric or negative g) are attached as warnings.
BoundReport m_bound_sup(const ProblemSpec& p, const QuadratureSettings& s = {},
                        int sup_samples = kDefaultSupSamples);

/// Hölder conjugates p, q > 1 with 1/p + 1/q = 1.
struct ConjugateExponents {
  double p = 2.0;
  double q = 2.0;

  /// Throws ParameterError when p <= 1 or |1/p + 1/q - 1| > 1e-12.
  void validate() const;
  /// The conjugate pair (p, p/(p-1)).
  static ConjugateExponents from_p(double p);
};

/// int_0^1 |t - 1/2|^(1/p) dt = (1/2)^(1/p) * p/(p+1).
double holder_factor(double p);

/// Checks int_0^1 |M| <= 2 ||g||_q int_0^1 |t - 1/2|^(1/p) dt, the q-norm taken
/// over the normalised parameter.
BoundReport m_bound_holder(const ProblemSpec& p, ConjugateExponents pq,
                           const QuadratureSettings& s = {});

/// G = (f(a) + f(b))/2 int_a^b g - int_a^b f g (signed).
double trapezoid_gap(const ProblemSpec& p, const QuadratureSettings& s = {});

/// |G - (b-a)^2/2 int_0^1 M(t) f'(ta + (1-t)b) dt|.
double lemma_identity_defect(const ProblemSpec& p, const QuadratureSettings& s = {});

/// |G - (b-a)^2/2 int_0^1 M(1-t) f'(tb + (1-t)a) dt|.
double mirrored_identity_defect(const ProblemSpec& p, const QuadratureSettings& s = {});

}  // namespace fejer

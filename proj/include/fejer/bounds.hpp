#pragma once

#include "fejer/integrate.hpp"
#include "fejer/kernel.hpp"
#include "fejer/mapping.hpp"
#include "fejer/problem.hpp"

namespace fejer {

/// Grid used when the bound routines spot-check |f'| for h-convexity.
inline constexpr int kHypothesisGrid = 21;

struct FejerTriple {
  double lhs = 0.0;  // f((a+b)/2) int g
  double mid = 0.0;  // int f g
  double rhs = 0.0;  // (f(a)+f(b))/2 int g
  bool left_holds = false;
  bool right_holds = false;
};

/// The three members of the weighted Hermite-Hadamard (Fejér) chain. The
/// verdicts use a 1e-8 * (1 + |value|) tolerance.
FejerTriple fejer_triple(const ProblemSpec& p, const QuadratureSettings& s = {});

/// |G| <= (b-a)(|f'(a)|+|f'(b)|) int_a^{(a+b)/2} g(x) S((x-a)/(b-a)) dx with
/// S(u) = int_0^u [h(t)+h(1-t)] dt. Requires symmetric g; a failed h-convexity
/// spot check of |f'| is attached as a warning.
BoundReport bound_h_convex(const ProblemSpec& p, const HKernel& h, const QuadratureSettings& s = {});

/// Right-half form: (b-a)(|f'(a)|+|f'(b)|) int_{(a+b)/2}^b g(x) S((b-x)/(b-a)) dx.
BoundReport bound_h_convex_mirror(const ProblemSpec& p, const HKernel& h,
                                  const QuadratureSettings& s = {});

/// Expanded s-convex form, s in (0, 1]:
/// (b-a)/(1+s) (|f'(a)|+|f'(b)|) int_a^{(a+b)/2} g(x) [u^{1+s} - (1-u)^{1+s} + 1] dx, u = (x-a)/(b-a).
BoundReport bound_s_convex(const ProblemSpec& p, double s_exp, const QuadratureSettings& s = {});

/// (|f'(a)|+|f'(b)|) int_a^{(a+b)/2} g(x)(x-a) dx.
BoundReport bound_convex_left(const ProblemSpec& p, const QuadratureSettings& s = {});

/// (|f'(a)|+|f'(b)|) int_{(a+b)/2}^b g(x)(b-x) dx.
BoundReport bound_convex_right(const ProblemSpec& p, const QuadratureSettings& s = {});

/// (b-a)^2 (|f'(a)|+|f'(b)|)/8: the unweighted trapezoid estimate, equal to
/// the convex bounds when g == 1.
double classical_trapezoid_bound(const ProblemSpec& p);

/// Earlier weighted estimate for convex |f'|, kept for comparison:
/// (b-a)/4 (|f'(a)|+|f'(b)|) int_0^1 int_{((1+t)a+(1-t)b)/2}^{((1-t)a+(1+t)b)/2} g dx dt.
BoundReport bound_reference_convex(const ProblemSpec& p, const QuadratureSettings& s = {});

struct DerivBounds {
  double m_lo;
  double m_hi;
  void validate() const;
};

struct BoundedDerivativeReports {
  /// int_0^1 M(t) dt times (m + M)/4.
  double offset = 0.0;
  BoundReport primary;   // (M-m)(b-a)/4 int |M|
  BoundReport sup_form;  // (M-m)(b-a)/8 ||g||_inf
  BoundReport holder_form;  // (M-m)(b-a)/2 ||g||_q int |t-1/2|^{1/p}
};

/// |G/(b-a) - (m+M)/4 int_0^1 M| against the three bounds for m <= f' <= M.
/// f' is sampled on a 201-point grid; excursions outside [m, M] become warnings.
BoundedDerivativeReports bound_bounded_derivative(const ProblemSpec& p, DerivBounds d,
                                                  ConjugateExponents pq = {},
                                                  const QuadratureSettings& s = {},
                                                  int sup_samples = kDefaultSupSamples);

struct LipschitzConstant {
  double K;
  void validate() const;
};

struct LipschitzReports {
  /// f'((a+b)/2)/2 times int_0^1 M(t) dt.
  double offset = 0.0;
  BoundReport primary;   // K(b-a)/2 int |t-1/2||M(t)| dt
  BoundReport sup_form;  // K(b-a) ||g||_inf / 12
};

/// |G/(b-a) - f'((a+b)/2)/2 int_0^1 M| for f' Lipschitz with constant K.
/// The Lipschitz property is spot-checked on 200 pseudo-random pairs.
LipschitzReports bound_lipschitz(const ProblemSpec& p, LipschitzConstant L,
                                 const QuadratureSettings& s = {},
                                 int sup_samples = kDefaultSupSamples);

}  // namespace fejer

#pragma once

#include <vector>

#include "fucik/coefficient_fn.hpp"

namespace fucik {

/// Which of the two weights of the asymmetric problem an operation acts on.
enum class WeightSel { m, n };

/// Numerical tolerances.  Defaults are the pinned production values; configs
/// may override them (selftest uses that to demonstrate degradation).
struct Tolerances {
  double rtol = 1e-10;           ///< integrator relative tolerance
  double atol = 1e-12;           ///< integrator absolute tolerance
  double zero_time_rel = 1e-11;  ///< zero location: tau_t = zero_time_rel*(t2-t1)
  double zero_residual_rel = 1e-9;  ///< |u| at an accepted zero vs max|u|
  double param_abs = 1e-10;      ///< parameter bisection: tau_a = param_abs*(1+|a|)
  double curve_rel = 1e-9;       ///< curve residual: tau_curve = curve_rel*(t2-t1)
};

/// Regular Sturm-Liouville data on [t1, t2]:
///
///   L u := -(p(t) u')' + q(t) u ,   p >= p_min > 0,  q >= 0,
///
/// with two continuous, possibly sign-changing weights m and n.  The
/// asymmetric eigenvalue problem couples them as
/// L u = a m(t) u+ - b n(t) u-  under Neumann conditions u'(t1)=u'(t2)=0.
///
/// Construction validates: t1 < t2; p, q, m, n defined on all of [t1, t2];
/// min p > 0; min q >= 0 (up to roundoff); m and n not identically zero.
/// Violations throw InvalidProblem naming the field.
class SLProblem {
 public:
  SLProblem(double t1, double t2, CoefficientFn p, CoefficientFn q,
            CoefficientFn m, CoefficientFn n, Tolerances tol = {});

  double t1() const { return t1_; }
  double t2() const { return t2_; }
  double length() const { return t2_ - t1_; }

  const CoefficientFn& p() const { return p_; }
  const CoefficientFn& q() const { return q_; }
  const CoefficientFn& m() const { return m_; }
  const CoefficientFn& n() const { return n_; }
  const CoefficientFn& weight(WeightSel w) const {
    return w == WeightSel::m ? m_ : n_;
  }

  double p_min() const { return p_min_; }
  const Tolerances& tol() const { return tol_; }

  /// Derived tolerances.
  double tau_t() const { return tol_.zero_time_rel * length(); }
  double tau_curve() const { return tol_.curve_rel * length(); }
  double tau_a(double a) const;

  /// Interior breakpoints of p, q and the selected weight, merged and
  /// sorted: the points integration steps must not straddle.
  std::vector<double> breakpoints(WeightSel w) const;

  /// The problem under the change of variable t -> -t, posed on
  /// [-t2, -t1].  Zero structure mirrors exactly; right-anchored shots are
  /// implemented as left-anchored shots on the reflection.
  SLProblem reflected() const;

 private:
  double t1_, t2_;
  CoefficientFn p_, q_, m_, n_;
  Tolerances tol_;
  double p_min_ = 0.0;
};

}  // namespace fucik

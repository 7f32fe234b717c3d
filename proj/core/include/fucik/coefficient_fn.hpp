#pragma once

#include <array>
#include <vector>

#include "fucik/errors.hpp"

namespace fucik {

/// Scalar coefficient function over an interval.  Three closed-form shapes
/// are supported, chosen so that extrema, integrals and roots are exact:
///
///   constant   f(t) = value
///   pwlinear   continuous piecewise-linear interpolant of (t_i, y_i) knots,
///              t_i strictly increasing; defined on [t_0, t_last]
///   sine       f(t) = amplitude * sin(omega * t + phase) + offset
///
/// Integration steps are clipped at breakpoints() so the integrator only
/// ever sees a smooth piece.
class CoefficientFn {
 public:
  enum class Kind { constant, pwlinear, sine };

  struct Knot {
    double t;
    double y;
  };

  static CoefficientFn constant(double value);
  /// Knots must be strictly increasing in t and there must be at least two.
  static CoefficientFn pwlinear(std::vector<Knot> knots);
  static CoefficientFn sine(double amplitude, double omega, double phase,
                            double offset);

  Kind kind() const { return kind_; }

  double operator()(double t) const;

  /// Interior breakpoints strictly inside (lo, hi): the pwlinear knot
  /// abscissae.  Constant and sine have none.
  std::vector<double> breakpoints_in(double lo, double hi) const;

  /// Exact extrema over [lo, hi] (closed-form: endpoints, knots, and the
  /// stationary points of the sine).
  double min_on(double lo, double hi) const;
  double max_on(double lo, double hi) const;
  double max_abs_on(double lo, double hi) const;

  /// Exact integral over [lo, hi].
  double integral_on(double lo, double hi) const;

  /// All roots in [lo, hi], ascending, exact up to rounding.  A maximal
  /// subinterval on which the function vanishes identically (pwlinear
  /// plateau) is reported through plateaus_in(), not here.
  std::vector<double> roots_in(double lo, double hi) const;

  /// Maximal subintervals of [lo, hi] on which the function is identically
  /// zero (only pwlinear can have them). Pairs (lo, hi), ascending.
  std::vector<std::array<double, 2>> plateaus_in(double lo, double hi) const;

  /// The function g(t) = f(-t): same family, mirrored parameters.
  CoefficientFn reflected() const;

  /// True if the function is defined on all of [lo, hi] (only pwlinear has a
  /// bounded domain).
  bool covers(double lo, double hi) const;

  // Parameter accessors for serialization.
  double const_value() const { return params_[0]; }
  const std::vector<Knot>& knots() const { return knots_; }
  double amplitude() const { return params_[0]; }
  double omega() const { return params_[1]; }
  double phase() const { return params_[2]; }
  double offset() const { return params_[3]; }

  friend bool operator==(const CoefficientFn&, const CoefficientFn&);

 private:
  CoefficientFn(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::array<double, 4> params_{0, 0, 0, 0};  // constant: value; sine: A, w, ph, off
  std::vector<Knot> knots_;                   // pwlinear only
};

}  // namespace fucik

#include "fucik/zero_functions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fucik/errors.hpp"
#include "fucik/shooting.hpp"

namespace fucik {

ExtReal dirichlet_next_zero(const SLProblem& prob, WeightSel weight, double a,
                            double s) {
  double slack = 1e-12 * (1.0 + std::fabs(prob.t1()) + std::fabs(prob.t2()));
  if (s < prob.t1() - slack || s > prob.t2() + slack)
    throw InvalidStart("dirichlet_next_zero: start outside [t1, t2]");
  s = std::clamp(s, prob.t1(), prob.t2());
  ShotResult r =
      detail::shoot_light(prob, weight, a, s, prob.t2(), 0.0, prob.p()(s));
  return r.zero;
}

ExtReal neumann_first_zero(const SLProblem& prob, WeightSel weight, double a) {
  ShotResult r =
      detail::shoot_light(prob, weight, a, prob.t1(), prob.t2(), 1.0, 0.0);
  return r.zero;
}

ExtReal neumann_last_zero(const SLProblem& prob, WeightSel weight, double a) {
  SLProblem rp = prob.reflected();
  ShotResult r =
      detail::shoot_light(rp, weight, a, rp.t1(), rp.t2(), 1.0, 0.0);
  if (r.zero.is_finite()) return ExtReal::finite(-r.zero.value());
  return ExtReal::neg_inf();
}

namespace {

// Pointwise f1 >= f2 (or <=) over the interval, sampled on a uniform
// 4096-point grid augmented with every coefficient breakpoint.  The
// coefficient families here are piecewise smooth, so this density is
// decisive; slack 1e-12 absorbs roundoff.
bool dominates(const CoefficientFn& f1, const CoefficientFn& f2, double lo,
               double hi, bool f1_above) {
  std::vector<double> ts;
  const int kGrid = 4096;
  ts.reserve(kGrid + 9);
  for (int i = 0; i <= kGrid; ++i)
    ts.push_back(lo + (hi - lo) * static_cast<double>(i) / kGrid);
  for (const CoefficientFn* f : {&f1, &f2})
    for (double b : f->breakpoints_in(lo, hi)) ts.push_back(b);
  for (double t : ts) {
    double d = f1(t) - f2(t);
    if (f1_above ? d < -1e-12 : d > 1e-12) return false;
  }
  return true;
}

bool strictly_apart(const CoefficientFn& f1, const CoefficientFn& f2,
                    double lo, double hi) {
  const int kGrid = 4096;
  for (int i = 0; i <= kGrid; ++i) {
    double t = lo + (hi - lo) * static_cast<double>(i) / kGrid;
    if (std::fabs(f1(t) - f2(t)) > 1e-12) return true;
  }
  return false;
}

}  // namespace

CompareWitness compare_first_zeros(const SLProblem& prob1,
                                   const SLProblem& prob2) {
  double scale = 1.0 + std::fabs(prob1.t1()) + std::fabs(prob1.t2());
  if (std::fabs(prob1.t1() - prob2.t1()) > 1e-12 * scale ||
      std::fabs(prob1.t2() - prob2.t2()) > 1e-12 * scale)
    throw HypothesisViolated("compare_first_zeros: intervals differ");

  double lo = prob1.t1(), hi = prob1.t2();
  if (!dominates(prob1.p(), prob2.p(), lo, hi, /*f1_above=*/true))
    throw HypothesisViolated("compare_first_zeros: requires p1 >= p2");
  if (!dominates(prob1.q(), prob2.q(), lo, hi, /*f1_above=*/true))
    throw HypothesisViolated("compare_first_zeros: requires q1 >= q2");
  if (!dominates(prob1.weight(WeightSel::m), prob2.weight(WeightSel::m), lo,
                 hi, /*f1_above=*/false))
    throw HypothesisViolated("compare_first_zeros: requires m1 <= m2");

  CompareWitness w;
  w.z1 = neumann_first_zero(prob1, WeightSel::m, 1.0);
  w.z2 = neumann_first_zero(prob2, WeightSel::m, 1.0);
  w.strict = strictly_apart(prob1.p(), prob2.p(), lo, hi) ||
             strictly_apart(prob1.q(), prob2.q(), lo, hi) ||
             strictly_apart(prob1.weight(WeightSel::m),
                            prob2.weight(WeightSel::m), lo, hi);

  // The one-sided comparison theorem: the faster problem cannot lag.  A
  // violation here would mean the orderings above were numerically hollow.
  if (w.z1.is_finite()) {
    if (w.z2 > w.z1)
      throw HypothesisViolated(
          "compare_first_zeros: computed zeros violate the ordering");
  }
  return w;
}

}  // namespace fucik

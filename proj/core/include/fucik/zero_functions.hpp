#pragma once

#include "fucik/ext_real.hpp"
#include "fucik/problem.hpp"

namespace fucik {

/// First zero strictly right of s of the solution with u(s)=0, u'(s)=1
/// under L u = a * weight * u; pos_inf when u has no zero in (s, t2].
/// The underlying zero-count structure makes this strictly decreasing in a
/// on the positive axis (strictly increasing on the negative axis) wherever
/// finite, with limit +inf as a -> 0 when q == 0.
ExtReal dirichlet_next_zero(const SLProblem& prob, WeightSel weight, double a,
                            double s);

/// First zero right of t1 of the left-anchored Neumann solution
/// (v(t1)=1, v'(t1)=0); pos_inf when v has no zero in (t1, t2].
ExtReal neumann_first_zero(const SLProblem& prob, WeightSel weight, double a);

/// Last zero left of t2 of the right-anchored Neumann solution
/// (v(t2)=1, v'(t2)=0); neg_inf when v has no zero in [t1, t2).
/// Computed on the t -> -t reflection of the problem.
ExtReal neumann_last_zero(const SLProblem& prob, WeightSel weight, double a);

/// Witness for the first-zero comparison of two ordered problems.
struct CompareWitness {
  ExtReal z1;   ///< first zero of the prob1 Neumann solution
  ExtReal z2;   ///< first zero of the prob2 Neumann solution
  bool strict;  ///< some coefficient inequality is strict somewhere
};

/// Sturm-type comparison: with p1 >= p2 > 0, q1 >= q2 >= 0 and m1 <= m2
/// pointwise (checked on a 4096-point grid plus breakpoints, tolerance
/// 1e-12), the prob2 Neumann solution vanishes no later than the prob1 one:
/// z2 <= z1.  If any inequality is strict somewhere and z1 is finite, z2 < z1.
/// The weights are compared as given; both shots run L v = m v.
/// Throws HypothesisViolated when the pointwise ordering fails.
CompareWitness compare_first_zeros(const SLProblem& prob1,
                                   const SLProblem& prob2);

}  // namespace fucik

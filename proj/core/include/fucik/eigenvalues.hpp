#pragma once

#include <vector>

#include "fucik/problem.hpp"

namespace fucik {

enum class Branch { positive, negative };

/// One weighted Neumann eigenvalue L v = lambda * weight * v.
struct Eigenvalue {
  int index;           ///< 1, 2, ... on the positive branch; -1, -2, ... negative
  double value;        ///< lambda
  int interior_zeros;  ///< zeros of v in (t1, t2); equals |index| - 1
  double miss_residual;  ///< |v'(t2)| at the reported value
  bool is_double;      ///< coincides with its neighbor (reported twice)
};

/// Shooting miss function for the Neumann problem at parameter a: the shot
/// starts with v(t1)=1, v'(t1)=0, and a is an eigenvalue exactly when
/// v'(t2) = 0.  interior_zeros counts zeros of v strictly inside (t1, t2).
struct MissResult {
  double miss;  ///< v'(t2), possibly renormalized for extreme a (sign exact)
  int interior_zeros;
};
MissResult neumann_miss(const SLProblem& prob, WeightSel weight, double a);

/// First `count` eigenvalues of the selected branch, ascending in |index|.
///
/// Brackets come from a geometric scan of the miss function (|a| from 1e-3,
/// ratio 1.25) refined by bisection to tau_a = 1e-10 * (1 + |a|); each
/// eigenvalue's index is classified by the interior zero count at the
/// refined value.  a = 0 is special-cased when q == 0: the closed-form
/// integral of the weight decides which branch owns the principal
/// eigenvalue 0.  Sign-changing weights can hide a pair of crossings in one
/// scan step with no net sign change (resonances of separated oscillation
/// windows); any segment whose interior zero count moves is therefore
/// split recursively until each crossing is isolated.  Exact double
/// eigenvalues surface as a dip of |miss| to zero and are reported twice
/// with is_double set.
///
/// Throws BranchEmpty when the weight never attains the branch sign, and
/// ScanExhausted when |a| = 1e7 is reached before `count` eigenvalues.
std::vector<Eigenvalue> eigenvalues(const SLProblem& prob, WeightSel weight,
                                    Branch branch, int count);

}  // namespace fucik

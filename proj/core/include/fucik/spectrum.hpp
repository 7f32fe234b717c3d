#pragma once

#include <optional>
#include <vector>

#include "fucik/ext_real.hpp"
#include "fucik/problem.hpp"

namespace fucik {

/// Sign of u at the right endpoint: the spectrum splits into families of
/// curves indexed by interior zero count k and this ending sign.
enum class EndSign { positive, negative };  // u(t2) > 0  /  u(t2) < 0

/// One spectrum curve: solutions with exactly k interior zeros ending with
/// the given sign.  k >= 1; the k = 0 trivial lines sit at the principal
/// eigenvalues and are reported separately.
struct CurveId {
  int k;
  EndSign end_sign;
};

/// Open quadrant of the (a, b) plane, by coordinate signs (+1 / -1).
struct Quadrant {
  int sign_a;
  int sign_b;
};

/// Left-to-right walk of the k interior zeros of a candidate solution.
///
/// A solution with k interior zeros has k+1 humps of alternating sign; the
/// last hump's sign is the ending sign, so the first hump's sign is the
/// ending sign when k is even and its opposite when k is odd.  Positive
/// humps obey L u = a m u, negative humps L u = b n u.  The first zero is
/// the Neumann first zero of the first hump's equation; each later zero is
/// the Dirichlet next zero of the hump being entered.  A link with no zero
/// makes the walk escape: last_zero = pos_inf and the zeros list stops.
struct HumpChain {
  ExtReal last_zero;
  std::vector<double> zeros;  ///< the finite prefix, ascending
};
HumpChain hump_chain(const SLProblem& prob, double a, double b, CurveId id);

/// Curve residual: (k-th zero from the left walk) minus (the matching zero
/// of the right-anchored Neumann solution of the last hump's equation).
/// Zero exactly on the curve; strictly monotone in b at fixed a on the
/// solvable range.  Infinite sentinels subtract in the extended sense; the
/// like-signed-infinite case throws NoInformation.  k >= 1 (InvalidK).
ExtReal residual(const SLProblem& prob, double a, double b, CurveId id);

/// Solve residual(a, ., id) = 0 for b inside the quadrant at fixed a.
/// Monotone bisection on a geometrically grown bracket (|b| from 1e-3,
/// ratio 2, bound 1e7), refined until |residual| <= tau_curve.  Returns the
/// signed infinity of the quadrant's b direction when the curve has no
/// point at this a below the bound ("not found below bounds") -- including
/// when the residual jumps across zero without attaining it because a
/// chain zero relocates between oscillation windows discontinuously in b.
/// When instead the bracket collapses to rounding width around a genuine
/// crossing whose computed residual cannot reach tau_curve (integration
/// noise of deep chains at large |a|), the converged b is returned; b is
/// then exact to one rounding step even though the residual check is not.
/// Throws BracketFailure if the residual signal is not monotone.
ExtReal solve_b(const SLProblem& prob, double a, CurveId id, Quadrant quad);

/// A solved curve point.
struct CurveSample {
  double a;
  double b;
  Quadrant quadrant;
  double residual;  ///< |residual| at the accepted point
  std::vector<double> chain_zeros;
};

/// Polyline of curve samples over an a-grid.
struct Curve {
  CurveId id;
  Quadrant quadrant;
  std::vector<CurveSample> samples;  ///< grid points where solve_b was finite
};

/// Sample one curve across a grid of a values (grid entries must lie in the
/// quadrant).  Verifies that b is strictly monotone along the samples
/// (decreasing when sign_a == sign_b, increasing otherwise).
Curve trace_curve(const SLProblem& prob, CurveId id, Quadrant quad,
                  const std::vector<double>& a_grid);

struct CurveEntry {
  CurveId id;
  bool double_curve;  ///< coincides with the opposite ending sign's curve
};

/// Census of one quadrant.
struct QuadrantReport {
  Quadrant quadrant;
  std::vector<CurveEntry> nonempty_curves;
  int count = 0;        ///< nonempty curves found (doubles count twice: once per id)
  bool saturated = false;  ///< every probed level up to k_max was nonempty
  std::optional<double> asymptote_vertical;
  std::optional<double> asymptote_horizontal;
};

/// Probe curve levels k = 1, 2, ... in one quadrant.  Emptiness is
/// operational: a level's curve is "nonempty" when solve_b lands on a point
/// over a 16-point log-spaced probe grid (from just right of the first
/// curve's vertical asymptote to |a| = 1e4), "empty" otherwise.  Probing
/// stops at the first level where at most one of the two ending signs is
/// nonempty, after verifying the next level is entirely empty; when both
/// signs stay nonempty through k_max the report is marked saturated.
/// Curves whose two ending signs agree to 1e-7 relative at shared probe
/// points are flagged as double curves.
QuadrantReport count_curves(const SLProblem& prob, Quadrant quad, int k_max);

/// Asymptotes of the first curve (k = 1) with the given ending sign in a
/// quadrant.  The vertical line is the a-limit as |b| -> inf, the
/// horizontal the b-limit as |a| -> inf; each solves a monotone
/// zero-function equation whose target is the corresponding weight's sign
/// support bound.  Throws UndefinedAsymptote when a required sign part is
/// missing or the target is unreachable.
struct AsymptotePair {
  double vertical;    ///< a value
  double horizontal;  ///< b value
};
AsymptotePair asymptotes(const SLProblem& prob, Quadrant quad,
                         EndSign end_sign);

/// Width of the spectral gap around the trivial lines for a single-weight
/// problem (m == n):  the nontrivial spectrum keeps at least this distance
/// from the principal eigenvalues in every quadrant it meets.  Positive.
double gap_epsilon(const SLProblem& prob);

}  // namespace fucik

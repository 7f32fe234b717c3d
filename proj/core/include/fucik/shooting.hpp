#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "fucik/ext_real.hpp"
#include "fucik/problem.hpp"

namespace fucik {

enum class Direction { forward, backward };

/// Which interval endpoint a Neumann shot is anchored at.
enum class Anchor { t1, t2 };

/// One accepted integrator step's dense-output polynomial for a component:
/// value(theta) = c0 + theta*(c1 + (1-theta)*(c2 + theta*(c3 + (1-theta)*c4)))
/// with theta = (t - t0)/h in [0, 1].  Fourth-order accurate between nodes.
struct DenseCoef {
  std::array<double, 5> c;
  double eval(double theta) const {
    return c[0] +
           theta * (c[1] + (1.0 - theta) *
                               (c[2] + theta * (c[3] + (1.0 - theta) * c[4])));
  }
};

struct DenseStep {
  double t0;  ///< step start (forward time of the underlying integration)
  double h;   ///< step length, > 0
  DenseCoef u, w;
};

struct TrajectoryNode {
  double t;
  double u;
  double w;  ///< momentum p(t) * u'(t)
};

/// A completed shot: accepted-step nodes plus per-step dense output, in the
/// direction requested (node times strictly decrease for backward shots).
/// State is (u, w = p u'); u' is recovered as w/p without differentiating p.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(Direction dir, std::vector<TrajectoryNode> nodes,
             std::vector<DenseStep> steps, double max_abs_u,
             bool mirrored = false, bool flip_u = false, bool flip_w = false)
      : direction_(dir),
        nodes_(std::move(nodes)),
        steps_(std::move(steps)),
        max_abs_u_(max_abs_u),
        mirrored_(mirrored),
        flip_u_(flip_u),
        flip_w_(flip_w) {}

  Direction direction() const { return direction_; }
  const std::vector<TrajectoryNode>& nodes() const { return nodes_; }
  double max_abs_u() const { return max_abs_u_; }

  /// Dense-output state (u, w) at a time inside the covered span.
  std::array<double, 2> state_at(double t) const;

 private:
  Direction direction_ = Direction::forward;
  std::vector<TrajectoryNode> nodes_;
  std::vector<DenseStep> steps_;  // in forward time of the integration
  double max_abs_u_ = 0.0;
  // Backward shots are integrated on the reflected problem; these map the
  // stored forward-frame dense output back to the caller's frame.
  bool mirrored_ = false;
  bool flip_u_ = false;
  bool flip_w_ = false;
};

/// Outcome of a shot.
struct ShotResult {
  /// First zero strictly beyond the start in the shot direction; pos_inf
  /// (forward) / neg_inf (backward) when the solution never vanishes before
  /// the far endpoint.  A zero exactly at the far endpoint is included.
  ExtReal zero;

  /// u'(zero); meaningful only when zero is finite.  Nonzero: zeros of
  /// nontrivial solutions are simple.
  double derivative_at_zero = 0.0;

  /// Number of zeros strictly between start and far endpoint.
  int interior_zero_count_to_end = 0;

  /// (u, u') at the far endpoint.
  std::array<double, 2> end_state{0.0, 0.0};

  /// Largest |u| seen along the shot (same renormalized units as end_state);
  /// used to put zero/derivative residuals on a solution-relative scale.
  double max_abs_u = 0.0;

  /// log2 of the renormalization applied to the state (0 in ordinary runs;
  /// nonzero only for extreme parameters where the solution would overflow).
  /// Zeros, zero counts and the sign of end_state are scale-invariant.
  double scale_log2 = 0.0;
};

/// Dirichlet-start shot: u(s) = 0, u'(s) = 1, integrated toward t2
/// (forward) or t1 (backward) under L u = a * weight * u.
/// s must lie in [t1, t2].
std::pair<Trajectory, ShotResult> shoot_dirichlet(const SLProblem& prob,
                                                  WeightSel weight, double a,
                                                  double s, Direction dir);

/// Neumann-start shot: v(anchor) = 1, v'(anchor) = 0, integrated toward the
/// opposite endpoint.  The t2 anchor is computed on the reflected problem
/// and mapped back, so both anchors share one forward integrator.
std::pair<Trajectory, ShotResult> shoot_neumann(const SLProblem& prob,
                                                WeightSel weight, double a,
                                                Anchor anchor);

namespace detail {

/// Forward shot from (ts, u0, w0) to te without trajectory collection; the
/// workhorse behind the zero-functions, eigenvalue scans and curve solvers.
ShotResult shoot_light(const SLProblem& prob, WeightSel weight, double a,
                       double ts, double te, double u0, double w0);

}  // namespace detail

}  // namespace fucik

#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "fucik/ext_real.hpp"
#include "fucik/problem.hpp"

namespace fucik {

enum class SignSide { positive, negative };

enum class ChangeKind { simple, multiple };

/// A point where the weight changes sign.  When the change happens across a
/// zero plateau [s', s], the point is the plateau's right end s.  All three
/// supported function shapes change sign finitely often, so `multiple`
/// (sign oscillation accumulating at a point) cannot occur for them; the
/// kind is kept so the count contract stays explicit.
struct ChangePoint {
  double t;
  ChangeKind kind;
};

struct SignInterval {
  double lo;
  double hi;
};

/// Exact sign decomposition of a weight over the problem interval.
///
/// strict_positive/strict_negative are the connected components of
/// {w > 0} / {w < 0} (open intervals; split at interior touch points).
/// positive_intervals/negative_intervals merge consecutive same-sign
/// components separated only by zeros or zero plateaus: maximal intervals
/// on which the weight is >= 0 (resp. <= 0) and not identically zero, with
/// an opposite-sign interval between any two of the same sign.
struct SignProfile {
  WeightSel weight = WeightSel::m;
  std::vector<SignInterval> positive_intervals;
  std::vector<SignInterval> negative_intervals;
  std::vector<SignInterval> strict_positive;
  std::vector<SignInterval> strict_negative;
  std::vector<ChangePoint> change_points;

  /// Number of points of change of sign; kUnbounded when a multiple point
  /// exists (cannot happen for the supported shapes).
  int sign_change_count = 0;
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  bool has_positive_part() const { return !strict_positive.empty(); }
  bool has_negative_part() const { return !strict_negative.empty(); }

  /// inf / sup of {t : w(t) > 0}; nullopt when the set is empty.
  std::optional<double> positive_support_min() const;
  std::optional<double> positive_support_max() const;
  std::optional<double> negative_support_min() const;
  std::optional<double> negative_support_max() const;

  std::optional<double> support_min(SignSide side) const {
    return side == SignSide::positive ? positive_support_min()
                                      : negative_support_min();
  }
  std::optional<double> support_max(SignSide side) const {
    return side == SignSide::positive ? positive_support_max()
                                      : negative_support_max();
  }
};

/// Compute the exact sign decomposition of the selected weight.  Values
/// with |w| <= 1e-14 at knots are treated as exact zeros (plateau edges).
/// Throws DegenerateWeight if the weight is numerically identically zero.
SignProfile sign_profile(const SLProblem& prob, WeightSel weight);

/// inf { t > s : w(t) has the requested sign }, pos_inf when the set is
/// empty.  Uses the strict components, so interior plateaus are skipped.
ExtReal sign_infimum_after(const SignProfile& profile, double s,
                           SignSide side);

}  // namespace fucik

#include "fucik/sign_profile.hpp"

#include <algorithm>
#include <cmath>

#include "fucik/coefficient_fn.hpp"
#include "fucik/errors.hpp"

namespace fucik {

namespace {

std::optional<double> front_lo(const std::vector<SignInterval>& v) {
  if (v.empty()) return std::nullopt;
  return v.front().lo;
}

std::optional<double> back_hi(const std::vector<SignInterval>& v) {
  if (v.empty()) return std::nullopt;
  return v.back().hi;
}

}  // namespace

std::optional<double> SignProfile::positive_support_min() const {
  return front_lo(strict_positive);
}
std::optional<double> SignProfile::positive_support_max() const {
  return back_hi(strict_positive);
}
std::optional<double> SignProfile::negative_support_min() const {
  return front_lo(strict_negative);
}
std::optional<double> SignProfile::negative_support_max() const {
  return back_hi(strict_negative);
}

SignProfile sign_profile(const SLProblem& prob, WeightSel weight) {
  const CoefficientFn& w = prob.weight(weight);
  const double t1 = prob.t1(), t2 = prob.t2();
  if (w.max_abs_on(t1, t2) <= 1e-14)
    throw DegenerateWeight("sign_profile: weight is identically zero");

  // Cut the interval at every root and plateau edge, then classify each
  // open cell by its midpoint: +1, -1 or 0 (inside a plateau).
  std::vector<double> cuts{t1, t2};
  for (double r : w.roots_in(t1, t2)) cuts.push_back(r);
  for (const auto& pl : w.plateaus_in(t1, t2)) {
    cuts.push_back(pl[0]);
    cuts.push_back(pl[1]);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [&](double x, double y) {
                           return std::fabs(x - y) <=
                                  1e-13 * (1.0 + std::fabs(x));
                         }),
             cuts.end());

  struct Cell {
    double lo, hi;
    int sign;
  };
  std::vector<Cell> cells;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    double v = w(0.5 * (lo + hi));
    int s = std::fabs(v) <= 1e-14 ? 0 : (v > 0 ? 1 : -1);
    cells.push_back({lo, hi, s});
  }

  SignProfile out;
  out.weight = weight;

  // Strict components of {w > 0} / {w < 0}: every interior cut is a zero
  // of w (a root or a plateau edge), so adjacent same-signed cells meet at
  // a touch point that splits the open set -- each signed cell is its own
  // component.
  for (const Cell& c : cells) {
    if (c.sign > 0)
      out.strict_positive.push_back({c.lo, c.hi});
    else if (c.sign < 0)
      out.strict_negative.push_back({c.lo, c.hi});
  }

  // Merged intervals: collapse zero cells and touch points between
  // same-signed neighbours; a merged interval ends only where the opposite
  // sign begins.
  std::vector<Cell> merged;
  for (const Cell& c : cells) {
    if (c.sign == 0) continue;
    if (!merged.empty() && merged.back().sign == c.sign)
      merged.back().hi = c.hi;
    else
      merged.push_back(c);
  }
  for (const Cell& c : merged) {
    (c.sign > 0 ? out.positive_intervals : out.negative_intervals)
        .push_back({c.lo, c.hi});
  }

  // Change points: between consecutive merged intervals of opposite sign.
  // When they are separated by a zero plateau, the convention places the
  // change at the plateau's right end = the next interval's left edge.
  for (size_t i = 0; i + 1 < merged.size(); ++i)
    out.change_points.push_back({merged[i + 1].lo, ChangeKind::simple});
  out.sign_change_count = static_cast<int>(out.change_points.size());
  return out;
}

ExtReal sign_infimum_after(const SignProfile& profile, double s,
                           SignSide side) {
  const std::vector<SignInterval>& comps = side == SignSide::positive
                                               ? profile.strict_positive
                                               : profile.strict_negative;
  for (const SignInterval& c : comps) {
    if (c.hi <= s) continue;
    // Part of this component lies beyond s.
    return ExtReal::finite(std::max(c.lo, s));
  }
  return ExtReal::pos_inf();
}

}  // namespace fucik

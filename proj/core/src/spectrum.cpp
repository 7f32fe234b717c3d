#include "fucik/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "fucik/eigenvalues.hpp"
#include "fucik/errors.hpp"
#include "fucik/sign_profile.hpp"
#include "fucik/zero_functions.hpp"

namespace fucik {

namespace {

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// A solution with k interior zeros has k+1 humps of alternating sign; the
// last hump carries the ending sign, so the first is the ending sign for
// even k and its opposite for odd k.
bool first_hump_positive(CurveId id) {
  return (id.k % 2 == 0) == (id.end_sign == EndSign::positive);
}

constexpr double kBracketBound = 1e7;  // |b| beyond which "not found"

}  // namespace

HumpChain hump_chain(const SLProblem& prob, double a, double b, CurveId id) {
  if (id.k < 1) throw InvalidK("hump_chain: k must be >= 1");
  HumpChain out;
  bool hump_pos = first_hump_positive(id);
  ExtReal z = hump_pos ? neumann_first_zero(prob, WeightSel::m, a)
                       : neumann_first_zero(prob, WeightSel::n, b);
  if (z.is_finite()) out.zeros.push_back(z.value());
  hump_pos = !hump_pos;
  for (int j = 2; j <= id.k && z.is_finite(); ++j) {
    z = hump_pos ? dirichlet_next_zero(prob, WeightSel::m, a, z.value())
                 : dirichlet_next_zero(prob, WeightSel::n, b, z.value());
    if (z.is_finite()) out.zeros.push_back(z.value());
    hump_pos = !hump_pos;
  }
  out.last_zero = z.is_finite() ? z : ExtReal::pos_inf();
  return out;
}

ExtReal residual(const SLProblem& prob, double a, double b, CurveId id) {
  HumpChain ch = hump_chain(prob, a, b, id);
  ExtReal tail = id.end_sign == EndSign::positive
                     ? neumann_last_zero(prob, WeightSel::m, a)
                     : neumann_last_zero(prob, WeightSel::n, b);
  return ch.last_zero - tail;
}

namespace {

// Limit of residual(a, b, id) as |b| -> inf with b of sign `sb`.  Every
// b-driven link collapses to the infimum of n's matching sign set (its
// strict lower bound for all finite b), while a-driven links integrate as
// usual; monotone link composition keeps the whole expression a strict
// lower bound.  A limit >= tau_curve therefore certifies that no b of this
// sign solves the curve equation at this a -- without growing any bracket.
ExtReal residual_b_limit(const SLProblem& prob, double a, CurveId id, int sb,
                         const SignProfile& profile_n) {
  SignSide side = sb > 0 ? SignSide::positive : SignSide::negative;
  bool hump_pos = first_hump_positive(id);
  ExtReal z = hump_pos ? neumann_first_zero(prob, WeightSel::m, a)
                       : sign_infimum_after(profile_n, prob.t1(), side);
  hump_pos = !hump_pos;
  for (int j = 2; j <= id.k && z.is_finite(); ++j) {
    z = hump_pos ? dirichlet_next_zero(prob, WeightSel::m, a, z.value())
                 : sign_infimum_after(profile_n, z.value(), side);
    hump_pos = !hump_pos;
  }
  if (!z.is_finite()) return ExtReal::pos_inf();

  ExtReal tail;
  if (id.end_sign == EndSign::positive) {
    tail = neumann_last_zero(prob, WeightSel::m, a);
  } else {
    std::optional<double> sup = profile_n.support_max(side);
    tail = sup ? ExtReal::finite(*sup) : ExtReal::neg_inf();
  }
  return z - tail;
}

}  // namespace

ExtReal solve_b(const SLProblem& prob, double a, CurveId id, Quadrant quad) {
  if (id.k < 1) throw InvalidK("solve_b: k must be >= 1");
  if (sgn(a) != quad.sign_a)
    throw Error("solve_b: sign of a does not match the quadrant");
  const int sb = quad.sign_b;
  const ExtReal no_point =
      sb > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
  const double tau_c = prob.tau_curve();

  // Certified-empty fast path: the residual is strictly decreasing in |b|
  // and strictly above its |b| -> inf limit; a limit clear of zero means
  // no crossing at any |b|, which is exactly what bracket growth to the
  // bound would conclude, at a fraction of the cost.
  SignProfile profile_n = sign_profile(prob, WeightSel::n);
  ExtReal lim = residual_b_limit(prob, a, id, sb, profile_n);
  if (lim.is_pos_inf() || (lim.is_finite() && lim.value() >= tau_c))
    return no_point;

  auto f = [&](double s) { return residual(prob, a, sb * s, id); };
  const ExtReal zero = ExtReal::finite(0.0);

  double s_lo = 1e-3;
  ExtReal r_lo = f(s_lo);
  while (r_lo < zero && s_lo > 1e-9) {
    s_lo *= 0.25;
    r_lo = f(s_lo);
  }
  if (r_lo < zero)
    throw BracketFailure(
        "solve_b: residual stays negative as |b| vanishes (monotone signal "
        "lost)");
  if (r_lo.is_finite() && std::fabs(r_lo.value()) <= tau_c)
    return ExtReal::finite(sb * s_lo);

  double s_hi = s_lo;
  ExtReal r_hi = r_lo;
  while (!(r_hi < zero)) {
    if (r_hi.is_finite() && std::fabs(r_hi.value()) <= tau_c)
      return ExtReal::finite(sb * s_hi);
    s_hi *= 2.0;
    if (s_hi > kBracketBound) return no_point;
    r_hi = f(s_hi);
  }

  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (s_lo + s_hi);
    ExtReal r = f(mid);
    if (r.is_finite() && std::fabs(r.value()) <= tau_c)
      return ExtReal::finite(sb * mid);
    if (r > zero) {
      s_lo = mid;
      r_lo = r;
    } else {
      s_hi = mid;
      r_hi = r;
    }
    if (s_hi - s_lo <= 1e-15 * (1.0 + s_hi)) break;
  }
  // The bracket is at rounding width -- b is pinned to one rounding step --
  // yet the residual still straddles zero beyond tolerance.  Two distinct
  // situations end here and they get opposite answers:
  //
  //  * The integration noise floor of a long chain exceeds tau_curve, while
  //    the true residual crosses zero inside the bracket.  The solution b
  //    is converged to machine precision; accept it.
  //  * The residual jumps across zero without attaining it, because moving
  //    b relocates a chain zero into another oscillation window (or makes
  //    the chain or the b-driven tail escape) all at once.  Then no b of
  //    this sign solves the level at this a, which is the same conclusion
  //    a bracket grown past the bound reports.
  //
  // A straddle within a small multiple of the tolerance is plain noise.
  // Beyond that, discriminate structurally: re-evaluate the chain at both
  // endpoints and ask whether any zero (or the b-driven tail) moved by a
  // macroscopic distance across the one-ulp bracket.  Continuous motion
  // across one rounding step is immeasurably small, so any displacement on
  // the scale of the interval certifies a window relocation.
  const double gap =
      (r_lo.is_finite() && r_hi.is_finite())
          ? r_lo.value() - r_hi.value()
          : std::numeric_limits<double>::infinity();
  if (gap <= 64.0 * tau_c) return ExtReal::finite(sb * 0.5 * (s_lo + s_hi));
  HumpChain chain_lo = hump_chain(prob, a, sb * s_lo, id);
  HumpChain chain_hi = hump_chain(prob, a, sb * s_hi, id);
  bool relocated = chain_lo.zeros.size() != chain_hi.zeros.size() ||
                   chain_lo.last_zero.is_finite() !=
                       chain_hi.last_zero.is_finite();
  double moved = 0.0;
  if (!relocated) {
    for (std::size_t i = 0; i < chain_lo.zeros.size(); ++i)
      moved = std::max(moved,
                       std::fabs(chain_lo.zeros[i] - chain_hi.zeros[i]));
    if (id.end_sign == EndSign::negative) {
      ExtReal tail_lo = neumann_last_zero(prob, WeightSel::n, sb * s_lo);
      ExtReal tail_hi = neumann_last_zero(prob, WeightSel::n, sb * s_hi);
      if (tail_lo.is_finite() != tail_hi.is_finite())
        relocated = true;
      else if (tail_lo.is_finite())
        moved = std::max(moved,
                         std::fabs(tail_lo.value() - tail_hi.value()));
    }
    relocated = relocated || moved > 1e-3 * (prob.t2() - prob.t1());
  }
  if (relocated) return no_point;
  return ExtReal::finite(sb * 0.5 * (s_lo + s_hi));
}

Curve trace_curve(const SLProblem& prob, CurveId id, Quadrant quad,
                  const std::vector<double>& a_grid) {
  Curve out;
  out.id = id;
  out.quadrant = quad;
  for (size_t i = 0; i < a_grid.size(); ++i) {
    if (sgn(a_grid[i]) != quad.sign_a)
      throw Error("trace_curve: grid value outside the quadrant");
    if (i > 0 && !(a_grid[i] > a_grid[i - 1]))
      throw Error("trace_curve: grid must be strictly ascending");
  }
  for (double a : a_grid) {
    ExtReal b = solve_b(prob, a, id, quad);
    if (!b.is_finite()) continue;
    CurveSample s;
    s.a = a;
    s.b = b.value();
    s.quadrant = quad;
    ExtReal r = residual(prob, a, s.b, id);
    s.residual = std::fabs(r.value());
    s.chain_zeros = hump_chain(prob, a, s.b, id).zeros;
    out.samples.push_back(std::move(s));
  }
  // Along a curve the solved b moves strictly monotonically: down when the
  // quadrant signs agree, up when they differ.
  bool decreasing = quad.sign_a == quad.sign_b;
  for (size_t i = 1; i < out.samples.size(); ++i) {
    double b0 = out.samples[i - 1].b, b1 = out.samples[i].b;
    double slack = 1e-12 * (1.0 + std::fabs(b0));
    if (decreasing ? b1 > b0 - slack : b1 < b0 + slack)
      throw Error("trace_curve: samples violate curve monotonicity");
  }
  return out;
}

namespace {

// Solve psi(dir * s) = target for the magnitude s by bisection, using the
// strict monotonicity of the zero-functions in the parameter magnitude.
// `increasing` describes psi(dir * s) as a function of s.  ExtReal values
// order the infinite tails correctly on both ends.
double solve_zero_fn_equation(const std::function<ExtReal(double)>& psi,
                              int dir, bool increasing, double target,
                              const SLProblem& prob, const char* what) {
  ExtReal tgt = ExtReal::finite(target);
  auto reached = [&](const ExtReal& v) {
    return increasing ? !(v < tgt) : !(v > tgt);
  };
  double s = 1e-3;
  ExtReal v = psi(dir * s);
  while (reached(v) && s > 1e-12) {
    s *= 0.25;
    v = psi(dir * s);
  }
  if (reached(v))
    throw UndefinedAsymptote(std::string(what) +
                             ": equation solved by a vanishing parameter");
  double s_lo = s, s_hi = s;
  while (!reached(v)) {
    s_lo = s_hi;
    s_hi *= 2.0;
    if (s_hi > kBracketBound)
      throw UndefinedAsymptote(std::string(what) +
                               ": no solution below the parameter bound");
    v = psi(dir * s_hi);
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (s_lo + s_hi);
    if (s_hi - s_lo <= prob.tau_a(mid)) break;
    if (reached(psi(dir * mid)))
      s_hi = mid;
    else
      s_lo = mid;
  }
  return 0.5 * (s_lo + s_hi);
}

SignSide side_of(int sign) {
  return sign > 0 ? SignSide::positive : SignSide::negative;
}

}  // namespace

AsymptotePair asymptotes(const SLProblem& prob, Quadrant quad,
                         EndSign end_sign) {
  SignProfile pm = sign_profile(prob, WeightSel::m);
  SignProfile pn = sign_profile(prob, WeightSel::n);
  SignSide side_a = side_of(quad.sign_a);
  SignSide side_b = side_of(quad.sign_b);
  if (side_a == SignSide::positive ? !pm.has_positive_part()
                                   : !pm.has_negative_part())
    throw UndefinedAsymptote("asymptotes: m lacks the quadrant's a-sign part");
  if (side_b == SignSide::positive ? !pn.has_positive_part()
                                   : !pn.has_negative_part())
    throw UndefinedAsymptote("asymptotes: n lacks the quadrant's b-sign part");

  auto psi1 = [&](WeightSel w) {
    return [&prob, w](double c) { return neumann_first_zero(prob, w, c); };
  };
  auto psi2 = [&](WeightSel w) {
    return [&prob, w](double c) { return neumann_last_zero(prob, w, c); };
  };

  AsymptotePair out;
  if (end_sign == EndSign::positive) {
    // First hump negative: the left chain is the first zero under (b, n),
    // the right side the last zero under (a, m).  |b| -> inf sends the
    // left side to n's sign infimum; |a| -> inf sends the right side to
    // m's sign supremum.
    ExtReal tv = sign_infimum_after(pn, prob.t1(), side_b);
    if (!tv.is_finite())
      throw UndefinedAsymptote("asymptotes: n has no sign set for the limit");
    out.vertical =
        quad.sign_a * solve_zero_fn_equation(psi2(WeightSel::m), quad.sign_a,
                                             /*increasing=*/true, tv.value(),
                                             prob, "asymptotes(vertical)");
    std::optional<double> th = pm.support_max(side_a);
    if (!th)
      throw UndefinedAsymptote("asymptotes: m has no sign set for the limit");
    out.horizontal =
        quad.sign_b * solve_zero_fn_equation(psi1(WeightSel::n), quad.sign_b,
                                             /*increasing=*/false, *th, prob,
                                             "asymptotes(horizontal)");
  } else {
    // Mirror image: first hump positive, tail under (b, n).
    std::optional<double> tv = pn.support_max(side_b);
    if (!tv)
      throw UndefinedAsymptote("asymptotes: n has no sign set for the limit");
    out.vertical =
        quad.sign_a * solve_zero_fn_equation(psi1(WeightSel::m), quad.sign_a,
                                             /*increasing=*/false, *tv, prob,
                                             "asymptotes(vertical)");
    ExtReal th = sign_infimum_after(pm, prob.t1(), side_a);
    if (!th.is_finite())
      throw UndefinedAsymptote("asymptotes: m has no sign set for the limit");
    out.horizontal =
        quad.sign_b * solve_zero_fn_equation(psi2(WeightSel::n), quad.sign_b,
                                             /*increasing=*/true, th.value(),
                                             prob, "asymptotes(horizontal)");
  }
  return out;
}

QuadrantReport count_curves(const SLProblem& prob, Quadrant quad, int k_max) {
  if (k_max < 1) throw InvalidK("count_curves: k_max must be >= 1");
  QuadrantReport rep;
  rep.quadrant = quad;

  SignProfile pm = sign_profile(prob, WeightSel::m);
  SignProfile pn = sign_profile(prob, WeightSel::n);
  bool m_ok = quad.sign_a > 0 ? pm.has_positive_part() : pm.has_negative_part();
  bool n_ok = quad.sign_b > 0 ? pn.has_positive_part() : pn.has_negative_part();
  if (!m_ok || !n_ok) return rep;  // quadrant cannot host solutions

  // Probe grid: 16 log-spaced |a| values from just past the first curve's
  // vertical asymptote (the lowest defined over both ending signs) up to
  // 1e4.  Emptiness below the bound is operational, not a theorem.
  double alpha = 0.0;
  bool have_asym = false;
  for (EndSign es : {EndSign::positive, EndSign::negative}) {
    try {
      AsymptotePair ap = asymptotes(prob, quad, es);
      double v = std::fabs(ap.vertical);
      alpha = have_asym ? std::min(alpha, v) : v;
      have_asym = true;
      if (!rep.asymptote_vertical) {
        rep.asymptote_vertical = ap.vertical;
        rep.asymptote_horizontal = ap.horizontal;
      }
    } catch (const UndefinedAsymptote&) {
    }
  }
  double s_lo = std::max(have_asym ? alpha * 1.05 + 0.01 : 0.0, 1e-2);
  double s_hi = 1e4;
  const int kProbes = 16;
  std::vector<double> probes(kProbes);
  for (int i = 0; i < kProbes; ++i)
    probes[i] = quad.sign_a * s_lo *
                std::pow(s_hi / s_lo, static_cast<double>(i) / (kProbes - 1));

  auto first_point = [&](CurveId id) -> std::optional<CurveSample> {
    for (double a : probes) {
      ExtReal b = solve_b(prob, a, id, quad);
      if (b.is_finite()) {
        CurveSample s;
        s.a = a;
        s.b = b.value();
        s.quadrant = quad;
        return s;
      }
    }
    return std::nullopt;
  };

  bool prev_both = true;
  for (int k = 1; k <= k_max; ++k) {
    CurveId id_gt{k, EndSign::positive}, id_lt{k, EndSign::negative};
    std::optional<CurveSample> pt_gt = first_point(id_gt);
    std::optional<CurveSample> pt_lt = first_point(id_lt);

    bool dbl = false;
    if (pt_gt && pt_lt) {
      // Compare at a shared a to decide coincidence.
      ExtReal other = solve_b(prob, pt_gt->a, id_lt, quad);
      dbl = other.is_finite() &&
            std::fabs(other.value() - pt_gt->b) <=
                1e-7 * (1.0 + std::fabs(pt_gt->b));
    }
    if (pt_gt) rep.nonempty_curves.push_back({id_gt, dbl});
    if (pt_lt) rep.nonempty_curves.push_back({id_lt, dbl});

    int nonempty = (pt_gt ? 1 : 0) + (pt_lt ? 1 : 0);
    if (nonempty <= 1) {
      // Stopping rule: a level with at most one curve ends the family;
      // verify the next level is empty before trusting it.
      bool next_empty = true;
      if (k < k_max) {
        next_empty = !first_point({k + 1, EndSign::positive}) &&
                     !first_point({k + 1, EndSign::negative});
      }
      if (next_empty) {
        prev_both = false;
        break;
      }
    }
    prev_both = nonempty == 2;
  }
  rep.saturated = prev_both;
  rep.count = static_cast<int>(rep.nonempty_curves.size());
  return rep;
}

double gap_epsilon(const SLProblem& prob) {
  if (!(prob.m() == prob.n()))
    throw InvalidProblem("gap_epsilon: requires a single weight (m == n)");
  SignProfile pm = sign_profile(prob, WeightSel::m);

  auto psi1 = [&prob](double c) {
    return neumann_first_zero(prob, WeightSel::m, c);
  };
  auto psi2 = [&prob](double c) {
    return neumann_last_zero(prob, WeightSel::m, c);
  };

  std::vector<double> gaps;
  if (pm.has_positive_part()) {
    double alpha = solve_zero_fn_equation(psi2, +1, /*increasing=*/true,
                                          prob.t1(), prob, "gap_epsilon");
    double beta = solve_zero_fn_equation(psi1, +1, /*increasing=*/false,
                                         prob.t2(), prob, "gap_epsilon");
    double l1 =
        eigenvalues(prob, WeightSel::m, Branch::positive, 1)[0].value;
    gaps.push_back(alpha - l1);
    gaps.push_back(beta - l1);
  }
  if (pm.has_negative_part()) {
    double alpha = solve_zero_fn_equation(psi2, -1, /*increasing=*/true,
                                          prob.t1(), prob, "gap_epsilon");
    double beta = solve_zero_fn_equation(psi1, -1, /*increasing=*/false,
                                         prob.t2(), prob, "gap_epsilon");
    double lm1 =
        eigenvalues(prob, WeightSel::m, Branch::negative, 1)[0].value;
    gaps.push_back(lm1 - (-alpha));
    gaps.push_back(lm1 - (-beta));
  }
  double eps = *std::min_element(gaps.begin(), gaps.end());
  if (!(eps > 0.0))
    throw Error("gap_epsilon: computed gap is not positive");
  return eps;
}

}  // namespace fucik

#include "fucik/eigenvalues.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fucik/errors.hpp"
#include "fucik/shooting.hpp"
#include "fucik/sign_profile.hpp"

namespace fucik {

MissResult neumann_miss(const SLProblem& prob, WeightSel weight, double a) {
  ShotResult r = detail::shoot_light(prob, weight, a, prob.t1(), prob.t2(),
                                     1.0, 0.0);
  return {r.end_state[1], r.interior_zero_count_to_end};
}

namespace {

constexpr double kScanStart = 1e-3;
constexpr double kScanRatio = 1.25;
constexpr double kScanLimit = 1e7;

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

double accept_tol(double lambda) { return 1e-6 * (1.0 + std::fabs(lambda)); }

struct Probe {
  double a;
  double miss;
  int zeros;
  int sign;
};

struct Scanner {
  const SLProblem& prob;
  WeightSel weight;
  int dir;  // +1 positive branch, -1 negative
  int wanted;
  std::vector<Eigenvalue>& out;

  Probe probe(double a) const {
    MissResult m = neumann_miss(prob, weight, a);
    return {a, m.miss, m.interior_zeros, sgn(m.miss)};
  }

  bool done() const { return static_cast<int>(out.size()) >= wanted; }

  // One sign crossing inside [lo, hi]: bisect to tau_a and classify by the
  // interior zero count at the refined point (bracket-edge counts are
  // unreliable: counts also jump at the interlaced mixed-boundary spectrum).
  void emit_crossing(Probe lo, Probe hi) {
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo.a + hi.a);
      if (!(std::fabs(hi.a - lo.a) > prob.tau_a(mid))) break;
      Probe pm = probe(mid);
      if (pm.sign == 0) {
        lo = pm;
        hi = pm;
        break;
      }
      (pm.sign == lo.sign ? lo : hi) = pm;
    }
    Probe fin = probe(0.5 * (lo.a + hi.a));
    Eigenvalue ev;
    ev.index = dir * (fin.zeros + 1);
    ev.value = fin.a;
    ev.interior_zeros = fin.zeros;
    ev.miss_residual = std::fabs(fin.miss);
    ev.is_double = false;
    out.push_back(ev);
  }

  void emit_double(const Probe& at, int zeros_low) {
    for (int j = 0; j < 2; ++j) {
      Eigenvalue ev;
      ev.index = dir * (zeros_low + 1 + j);
      ev.value = at.a;
      ev.interior_zeros = zeros_low + j;
      ev.miss_residual = std::fabs(at.miss);
      ev.is_double = true;
      out.push_back(ev);
      if (done()) return;
    }
  }

  // A zero-count transition squeezed below bracket resolution with no sign
  // flip: either an eigenvalue-free endpoint event or an exact double (the
  // miss curve touches zero).  The midpoint decides.
  void touch_check(const Probe& lo, const Probe& hi) {
    Probe mid = probe(0.5 * (lo.a + hi.a));
    if (std::fabs(mid.miss) <= accept_tol(mid.a))
      emit_double(mid, std::min(lo.zeros, hi.zeros));
  }

  // Suspicious valley of |miss| between same-signed probes: minimize it by
  // golden section.  An opposite-signed floor exposes a hidden pair of
  // simple crossings; a floor at (numerical) zero is a double eigenvalue;
  // anything else is a spurious dip.
  void resolve_dip(const Probe& lo, const Probe& hi, int depth) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a1 = std::min(lo.a, hi.a), a2 = std::max(lo.a, hi.a);
    double x1 = a2 - gr * (a2 - a1), x2 = a1 + gr * (a2 - a1);
    Probe p1 = probe(x1), p2 = probe(x2);
    if (p1.sign != 0 && p1.sign != lo.sign) return split(lo, p1, hi, depth);
    if (p2.sign != 0 && p2.sign != lo.sign) return split(lo, p2, hi, depth);
    for (int it = 0; it < 200 && (a2 - a1) > prob.tau_a(a1); ++it) {
      if (std::fabs(p1.miss) < std::fabs(p2.miss)) {
        a2 = x2;
        x2 = x1;
        p2 = p1;
        x1 = a2 - gr * (a2 - a1);
        p1 = probe(x1);
      } else {
        a1 = x1;
        x1 = x2;
        p1 = p2;
        x2 = a1 + gr * (a2 - a1);
        p2 = probe(x2);
      }
      Probe& pb = std::fabs(p1.miss) < std::fabs(p2.miss) ? p1 : p2;
      if (pb.sign != 0 && pb.sign != lo.sign) return split(lo, pb, hi, depth);
    }
    Probe best = std::fabs(p1.miss) < std::fabs(p2.miss) ? p1 : p2;
    if (std::fabs(best.miss) <= accept_tol(best.a))
      emit_double(best, std::min(lo.zeros, hi.zeros));
    // else: nothing there; |miss| dipped without reaching zero.
  }

  void split(const Probe& lo, const Probe& mid, const Probe& hi, int depth) {
    process(lo, mid, depth + 1);
    if (!done()) process(mid, hi, depth + 1);
  }

  // Segment dispatch.  A sign flip marks an odd number of crossings; a
  // zero-count change (in either direction -- zeros enter and leave through
  // t2) marks an endpoint event whose neighbourhood can hide an
  // even pair of crossings with no net flip, as happens near resonances of
  // weights with several oscillation windows.  Segments carrying either
  // signal are halved until each piece holds one isolated crossing or
  // shrinks to bracket resolution.
  void process(const Probe& lo, const Probe& hi, int depth) {
    if (done()) return;
    int jump = std::abs(hi.zeros - lo.zeros);
    bool flip = lo.sign != 0 && hi.sign != 0 && lo.sign != hi.sign;
    if (!flip && jump == 0) return;
    if (std::fabs(hi.a - lo.a) <= prob.tau_a(lo.a) || depth > 80) {
      if (flip)
        emit_crossing(lo, hi);
      else
        touch_check(lo, hi);
      return;
    }
    if (flip && jump <= 1) {
      emit_crossing(lo, hi);
      return;
    }
    Probe mid = probe(0.5 * (lo.a + hi.a));
    split(lo, mid, hi, depth);
  }
};

}  // namespace

std::vector<Eigenvalue> eigenvalues(const SLProblem& prob, WeightSel weight,
                                    Branch branch, int count) {
  if (count < 1) throw Error("eigenvalues: count must be >= 1");
  SignProfile profile = sign_profile(prob, weight);
  const int dir = branch == Branch::positive ? 1 : -1;
  if ((dir > 0 && !profile.has_positive_part()) ||
      (dir < 0 && !profile.has_negative_part()))
    throw BranchEmpty(dir > 0
                          ? "eigenvalues: weight has no positive part"
                          : "eigenvalues: weight has no negative part");

  std::vector<Eigenvalue> out;
  Scanner sc{prob, weight, dir, count, out};

  bool q_zero = prob.q().max_abs_on(prob.t1(), prob.t2()) <= 1e-14;
  Probe prev;
  if (q_zero) {
    // a = 0 solves the problem with v == 1; which branch owns it follows
    // the sign of the weight's integral.  Just off zero the miss behaves
    // like -a * integral, which seeds the scan sign on this branch.
    double integral =
        prob.weight(weight).integral_on(prob.t1(), prob.t2());
    double itol = 1e-12 * (1.0 + prob.weight(weight).max_abs_on(
                                     prob.t1(), prob.t2()) *
                                     prob.length());
    int tri = std::fabs(integral) <= itol ? 0 : sgn(integral);
    if (tri == 0 || tri == dir) {
      Eigenvalue ev;
      ev.index = dir;
      ev.value = 0.0;
      ev.interior_zeros = 0;
      ev.miss_residual = 0.0;
      ev.is_double = false;
      out.push_back(ev);
    }
    prev = Probe{0.0, 0.0, 0, tri == 0 ? 0 : -dir * tri};
  } else {
    prev = sc.probe(0.0);  // v'(T2; 0) > 0: q pushes the shot upward
  }

  double s = kScanStart;
  Probe prev2 = prev;
  bool have_prev2 = false;
  while (!sc.done()) {
    if (s > kScanLimit)
      throw ScanExhausted("eigenvalues: branch not filled below |a| = 1e7");
    Probe cur = sc.probe(dir * s);
    // A sharp valley of |miss| between quiet neighbours can hold a double
    // eigenvalue (or a tight pair) that flips no sign and moves no count.
    bool quiet = have_prev2 && prev2.sign == prev.sign &&
                 prev.sign == cur.sign && prev2.zeros == prev.zeros &&
                 prev.zeros == cur.zeros;
    if (quiet && std::fabs(prev.miss) <
                     1e-2 * std::min(std::fabs(prev2.miss),
                                     std::fabs(cur.miss)))
      sc.resolve_dip(prev2, cur, 0);
    if (!sc.done()) sc.process(prev, cur, 0);
    prev2 = prev;
    have_prev2 = true;
    prev = cur;
    s *= kScanRatio;
  }
  out.resize(static_cast<size_t>(count));
  return out;
}

}  // namespace fucik

#include "fucik/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fucik/errors.hpp"

namespace fucik {

namespace {

// Dormand-Prince 5(4) tableau, FSAL form, with the classic quartic
// dense-output weights.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0,
                 d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0,
                 d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0,
                 d7 = 69997945.0 / 29380423.0;

struct Rhs {
  const CoefficientFn* p;
  const CoefficientFn* q;
  const CoefficientFn* w;
  double a;

  void operator()(double t, const double y[2], double f[2]) const {
    f[0] = y[1] / (*p)(t);
    f[1] = ((*q)(t) - a * (*w)(t)) * y[0];
  }
};

struct RawShot {
  bool zero_found = false;
  double zero_t = 0.0;
  double zero_du = 0.0;
  int interior_count = 0;
  double end_u = 0.0;
  double end_du = 0.0;
  double scale_log2 = 0.0;
  double max_abs_u = 0.0;
  std::vector<TrajectoryNode> nodes;
  std::vector<DenseStep> steps;
};

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Locate the root of the dense u-polynomial inside an accepted step that
// bracketed a sign change: bisection down to tau_t on the time axis, then a
// few guarded Newton steps (derivative from the w-component dense output)
// so the residual |u| at the reported zero stays far below tolerance even
// at high frequencies.
double refine_zero_theta(const DenseCoef& cu, const DenseCoef& cw,
                         const CoefficientFn& p, double t0, double h,
                         int sign_lo, double tau_t) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && (hi - lo) * h > tau_t; ++it) {
    double mid = 0.5 * (lo + hi);
    int sm = sgn(cu.eval(mid));
    if (sm == 0) return mid;
    if (sm == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  double th = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    double u = cu.eval(th);
    double dudth = h * cw.eval(th) / p(t0 + th * h);
    if (dudth == 0.0) break;
    double nt = th - u / dudth;
    if (!(nt >= lo && nt <= hi)) break;
    th = nt;
  }
  return th;
}

// Forward integration of L u = a * weight * u as the first-order system
// (u, w = p u') from ts to te (ts < te), with zero-crossing events.
RawShot integrate_forward(const SLProblem& prob, WeightSel wsel, double a,
                          double ts, double te, double u0, double w0,
                          bool collect) {
  const Tolerances& tol = prob.tol();
  const double span = prob.length();
  const double tau_t = prob.tau_t();
  const Rhs rhs{&prob.p(), &prob.q(), &prob.weight(wsel), a};

  RawShot out;
  double y[2] = {u0, w0};
  out.max_abs_u = std::fabs(u0);

  if (!(te > ts)) {  // empty span: nothing to integrate
    out.end_u = u0;
    out.end_du = w0 / prob.p()(ts);
    return out;
  }

  // Steps never straddle a coefficient breakpoint and stay below the
  // oscillation bound: consecutive zeros are at least pi*sqrt(p_min/W)
  // apart (Sturm comparison with the constant-coefficient equation, with
  // W bounding (a*weight - q)+), so h <= 1.5/omega_max sees at most one.
  std::vector<double> stops;
  for (double bp : prob.breakpoints(wsel))
    if (bp > ts && bp < te) stops.push_back(bp);
  stops.push_back(te);

  double w_bound = std::fabs(a) * prob.weight(wsel).max_abs_on(ts, te) +
                   prob.q().max_abs_on(ts, te);
  double omega_max = std::sqrt(w_bound / prob.p_min());
  double h_max = (te - ts) / 8.0;
  if (omega_max > 0.0) h_max = std::min(h_max, 1.5 / omega_max);

  double t = ts;
  size_t stop_idx = 0;
  int sign_prev = sgn(y[0]);
  if (sign_prev == 0) sign_prev = sgn(y[1]);  // leaving a start zero: u' side

  double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], yt[2], y1[2];
  rhs(t, y, k1);

  if (collect) out.nodes.push_back({t, y[0], y[1]});

  double h = std::min(h_max, 1e-2 * span);
  bool rejected = false;
  const double h_floor = 1e-14 * span;

  while (t < te - 1e-14 * span) {
    while (stop_idx < stops.size() && stops[stop_idx] <= t + 1e-14 * span)
      ++stop_idx;
    double t_stop = stop_idx < stops.size() ? stops[stop_idx] : te;

    double h_exec = std::min({h, h_max, t_stop - t});
    if (h_exec < h_floor)
      throw NonFiniteState("integrator step size underflow");
    bool hits_stop = h_exec >= t_stop - t - 1e-14 * span;

    // the six stage evaluations (k1 carried from the previous step, FSAL)
    auto stage = [&](double c, const double* coef, int n, double* k) {
      const double* ks[6] = {k1, k2, k3, k4, k5, k6};
      yt[0] = y[0];
      yt[1] = y[1];
      for (int i = 0; i < n; ++i) {
        yt[0] += h_exec * coef[i] * ks[i][0];
        yt[1] += h_exec * coef[i] * ks[i][1];
      }
      rhs(t + c * h_exec, yt, k);
    };
    {
      const double s2[] = {a21};
      const double s3[] = {a31, a32};
      const double s4[] = {a41, a42, a43};
      const double s5[] = {a51, a52, a53, a54};
      const double s6[] = {a61, a62, a63, a64, a65};
      stage(c2, s2, 1, k2);
      stage(c3, s3, 2, k3);
      stage(c4, s4, 3, k4);
      stage(c5, s5, 4, k5);
      stage(1.0, s6, 5, k6);
    }
    for (int i = 0; i < 2; ++i)
      y1[i] = y[i] + h_exec * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                               a75 * k5[i] + a76 * k6[i]);
    double t1s = hits_stop ? t_stop : t + h_exec;
    rhs(t1s, y1, k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      double e = h_exec * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                           e6 * k6[i] + e7 * k7[i]);
      double sc = tol.atol + tol.rtol * std::max(std::fabs(y[i]), std::fabs(y1[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(0.5 * err);
    if (!std::isfinite(err) || !std::isfinite(y1[0]) || !std::isfinite(y1[1]))
      throw NonFiniteState("integrator state not finite");

    if (err > 1.0) {
      rejected = true;
      h = h_exec * std::max(0.2, 0.9 * std::pow(err, -0.2));
      continue;
    }

    // accepted: dense output for both components
    DenseStep ds;
    ds.t0 = t;
    ds.h = h_exec;
    for (int i = 0; i < 2; ++i) {
      double dy = y1[i] - y[i];
      DenseCoef& dc = (i == 0) ? ds.u : ds.w;
      dc.c[0] = y[i];
      dc.c[1] = dy;
      dc.c[2] = h_exec * k1[i] - dy;
      dc.c[3] = dy - h_exec * k7[i] - dc.c[2];
      dc.c[4] = h_exec * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                          d6 * k6[i] + d7 * k7[i]);
    }

    int sign_new = sgn(y1[0]);
    if (sign_prev != 0 && sign_new != 0 && sign_new != sign_prev) {
      double th = refine_zero_theta(ds.u, ds.w, prob.p(), t, h_exec,
                                    sign_prev, tau_t);
      double tz = t + th * h_exec;
      if (!out.zero_found) {
        out.zero_found = true;
        out.zero_t = tz;
        out.zero_du = ds.w.eval(th) / prob.p()(tz);
      }
      // a zero landing at the far endpoint is reported via `zero` but is
      // not strictly between start and end, so it stays out of the count
      if (tz < te - tau_t) ++out.interior_count;
    }
    if (sign_new != 0) sign_prev = sign_new;

    t = t1s;
    y[0] = y1[0];
    y[1] = y1[1];
    k1[0] = k7[0];
    k1[1] = k7[1];
    out.max_abs_u = std::max(out.max_abs_u, std::fabs(y[0]));

    // renormalize to dodge overflow/underflow on long non-oscillatory runs;
    // zeros, counts and end-state signs are invariant under scaling
    double amax = std::max(std::fabs(y[0]), std::fabs(y[1]));
    if (amax > 1e150 || (amax > 0.0 && amax < 1e-150)) {
      int ex = std::ilogb(amax);
      double sc = std::ldexp(1.0, -ex);
      y[0] *= sc;
      y[1] *= sc;
      k1[0] *= sc;
      k1[1] *= sc;
      out.max_abs_u *= sc;
      out.scale_log2 += ex;
    }

    if (collect) {
      out.nodes.push_back({t, y[0], y[1]});
      out.steps.push_back(ds);
    }

    double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 10.0;
    fac = std::min(rejected ? 1.0 : 10.0, std::max(0.2, fac));
    rejected = false;
    h = h_exec * fac;
  }

  out.end_u = y[0];
  out.end_du = y[1] / prob.p()(te);

  // A zero can sit exactly on the far endpoint, where no sign change is
  // visible inside the interval.  Accept it when the interpolated crossing
  // lies within 10*tau_t of the edge (|u| <= |u'| * 10*tau_t).  This is not
  // grazing: the crossing exists, the interval merely truncates it.  It
  // never counts as an interior zero.
  if (!out.zero_found) {
    double guard = std::max(10.0 * tol.atol,
                            std::fabs(out.end_du) * 10.0 * tau_t);
    if (std::fabs(out.end_u) <= guard && std::fabs(out.end_du) > 0.0) {
      out.zero_found = true;
      out.zero_t = te;
      out.zero_du = out.end_du;
    }
  }
  return out;
}

ShotResult make_result_forward(const RawShot& raw) {
  ShotResult r;
  r.zero = raw.zero_found ? ExtReal::finite(raw.zero_t) : ExtReal::pos_inf();
  r.derivative_at_zero = raw.zero_du;
  r.interior_zero_count_to_end = raw.interior_count;
  r.end_state = {raw.end_u, raw.end_du};
  r.max_abs_u = raw.max_abs_u;
  r.scale_log2 = raw.scale_log2;
  return r;
}

}  // namespace

std::array<double, 2> Trajectory::state_at(double t) const {
  if (steps_.empty()) throw Error("Trajectory::state_at: empty trajectory");
  double ti = mirrored_ ? -t : t;
  size_t lo = 0, hi = steps_.size();
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (steps_[mid].t0 <= ti)
      lo = mid;
    else
      hi = mid;
  }
  const DenseStep& ds = steps_[lo];
  double th = std::clamp((ti - ds.t0) / ds.h, 0.0, 1.0);
  double u = ds.u.eval(th);
  double w = ds.w.eval(th);
  return {flip_u_ ? -u : u, flip_w_ ? -w : w};
}

std::pair<Trajectory, ShotResult> shoot_dirichlet(const SLProblem& prob,
                                                  WeightSel weight, double a,
                                                  double s, Direction dir) {
  double slack = 1e-12 * (1.0 + std::fabs(prob.t1()) + std::fabs(prob.t2()));
  if (s < prob.t1() - slack || s > prob.t2() + slack)
    throw InvalidStart("shoot_dirichlet: start outside [t1, t2]");
  s = std::clamp(s, prob.t1(), prob.t2());

  if (dir == Direction::forward) {
    RawShot raw = integrate_forward(prob, weight, a, s, prob.t2(), 0.0,
                                    prob.p()(s), true);
    Trajectory traj(Direction::forward, std::move(raw.nodes),
                    std::move(raw.steps), raw.max_abs_u);
    return {std::move(traj), make_result_forward(raw)};
  }

  // Backward: reflect, shoot forward, map back.  With U the reflected shot
  // (U(-s)=0, U'(-s)=1), the original solution is u(t) = -U(-t): zeros
  // mirror, u'(t) = U'(-t) keeps its value, nodes flip u and keep w.
  SLProblem rprob = prob.reflected();
  RawShot raw = integrate_forward(rprob, weight, a, -s, rprob.t2(), 0.0,
                                  rprob.p()(-s), true);
  ShotResult r;
  r.zero = raw.zero_found ? ExtReal::finite(-raw.zero_t) : ExtReal::neg_inf();
  r.derivative_at_zero = raw.zero_du;
  r.interior_zero_count_to_end = raw.interior_count;
  r.end_state = {-raw.end_u, raw.end_du};
  r.max_abs_u = raw.max_abs_u;
  r.scale_log2 = raw.scale_log2;

  std::vector<TrajectoryNode> nodes(raw.nodes.size());
  for (size_t i = 0; i < raw.nodes.size(); ++i) {
    const TrajectoryNode& nd = raw.nodes[i];
    nodes[i] = {-nd.t, -nd.u, nd.w};
  }
  Trajectory traj(Direction::backward, std::move(nodes), std::move(raw.steps),
                  raw.max_abs_u, /*mirrored=*/true, /*flip_u=*/true,
                  /*flip_w=*/false);
  return {std::move(traj), std::move(r)};
}

std::pair<Trajectory, ShotResult> shoot_neumann(const SLProblem& prob,
                                                WeightSel weight, double a,
                                                Anchor anchor) {
  if (anchor == Anchor::t1) {
    RawShot raw = integrate_forward(prob, weight, a, prob.t1(), prob.t2(),
                                    1.0, 0.0, true);
    Trajectory traj(Direction::forward, std::move(raw.nodes),
                    std::move(raw.steps), raw.max_abs_u);
    return {std::move(traj), make_result_forward(raw)};
  }

  // Right anchor: with V the left-anchored shot on the reflection, the
  // original solution is v(t) = V(-t): zeros mirror, v'(t) = -V'(-t),
  // nodes keep v and flip w.
  SLProblem rprob = prob.reflected();
  RawShot raw = integrate_forward(rprob, weight, a, rprob.t1(), rprob.t2(),
                                  1.0, 0.0, true);
  ShotResult r;
  r.zero = raw.zero_found ? ExtReal::finite(-raw.zero_t) : ExtReal::neg_inf();
  r.derivative_at_zero = -raw.zero_du;
  r.interior_zero_count_to_end = raw.interior_count;
  r.end_state = {raw.end_u, -raw.end_du};
  r.max_abs_u = raw.max_abs_u;
  r.scale_log2 = raw.scale_log2;

  std::vector<TrajectoryNode> nodes(raw.nodes.size());
  for (size_t i = 0; i < raw.nodes.size(); ++i) {
    const TrajectoryNode& nd = raw.nodes[i];
    nodes[i] = {-nd.t, nd.u, -nd.w};
  }
  Trajectory traj(Direction::backward, std::move(nodes), std::move(raw.steps),
                  raw.max_abs_u, /*mirrored=*/true, /*flip_u=*/false,
                  /*flip_w=*/true);
  return {std::move(traj), std::move(r)};
}

namespace detail {

// Shot without trajectory collection: the workhorse behind the
// zero-functions, eigenvalue scans and curve solvers.
ShotResult shoot_light(const SLProblem& prob, WeightSel weight, double a,
                       double ts, double te, double u0, double w0) {
  RawShot raw = integrate_forward(prob, weight, a, ts, te, u0, w0, false);
  return make_result_forward(raw);
}

}  // namespace detail

}  // namespace fucik

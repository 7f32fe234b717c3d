// Independent verification oracle for the test suite.
//
// Everything here is deliberately disjoint from the library: a fixed-step
// classical RK4 integrator with cubic-Hermite zero location, plus the
// textbook closed forms for the constant-coefficient problem.  Expected
// values in the tests are produced by this oracle (or by the closed forms),
// never by the code under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

struct Shot {
  double end_u = 0.0;
  double end_w = 0.0;                // w = p u'
  std::vector<double> zeros;         // interior zeros of u, ascending
};

// Integrates u' = w/p, w' = (q - a*wgt) u from t1 to t2 with `steps`
// RK4 steps per unit time (clipped at the supplied breakpoints), recording
// zeros of u via cubic Hermite interpolation inside each step.
inline Shot rk4_shoot(const Fn& p, const Fn& q, const Fn& wgt, double a,
                      double t1, double t2, double u0, double w0,
                      const std::vector<double>& breaks = {},
                      double steps_per_unit = 40000.0) {
  auto fu = [&](double t, double u, double w) {
    (void)t;
    (void)u;
    return w / p(t);
  };
  auto fw = [&](double t, double u, double w) {
    (void)w;
    return (q(t) - a * wgt(t)) * u;
  };

  std::vector<double> stops = breaks;
  stops.push_back(t2);
  std::sort(stops.begin(), stops.end());

  Shot out;
  double t = t1, u = u0, w = w0;
  for (double stop : stops) {
    if (!(stop > t)) continue;
    if (stop > t2) break;
    long n = std::max(1L, std::lround((stop - t) * steps_per_unit));
    double h = (stop - t) / double(n);
    for (long i = 0; i < n; ++i) {
      double tu = u, tw = w;
      double du0 = fu(t, tu, tw), dw0 = fw(t, tu, tw);
      double u1 = tu + 0.5 * h * du0, w1 = tw + 0.5 * h * dw0;
      double du1 = fu(t + 0.5 * h, u1, w1), dw1 = fw(t + 0.5 * h, u1, w1);
      double u2 = tu + 0.5 * h * du1, w2 = tw + 0.5 * h * dw1;
      double du2 = fu(t + 0.5 * h, u2, w2), dw2 = fw(t + 0.5 * h, u2, w2);
      double u3 = tu + h * du2, w3 = tw + h * dw2;
      double du3 = fu(t + h, u3, w3), dw3 = fw(t + h, u3, w3);
      double un = tu + h / 6.0 * (du0 + 2.0 * du1 + 2.0 * du2 + du3);
      double wn = tw + h / 6.0 * (dw0 + 2.0 * dw1 + 2.0 * dw2 + dw3);
      double tn = t + h;
      if ((u > 0.0 && un < 0.0) || (u < 0.0 && un > 0.0)) {
        // Cubic Hermite on [t, tn]: values u, un; slopes fu at both ends.
        double s0 = fu(t, u, w) * h, s1 = fu(tn, un, wn) * h;
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200; ++it) {
          double x = 0.5 * (lo + hi);
          double h00 = (1 + 2 * x) * (1 - x) * (1 - x);
          double h10 = x * (1 - x) * (1 - x);
          double h01 = x * x * (3 - 2 * x);
          double h11 = x * x * (x - 1);
          double v = h00 * u + h10 * s0 + h01 * un + h11 * s1;
          if ((v < 0.0) == (un < 0.0))
            hi = x;
          else
            lo = x;
        }
        out.zeros.push_back(t + 0.5 * (lo + hi) * h);
      }
      t = tn;
      u = un;
      w = wn;
    }
    t = stop;
  }
  out.end_u = u;
  out.end_w = w;
  return out;
}

// First zero > t1 of the left Neumann shot u(t1)=1, u'(t1)=0.
inline double neumann_first_zero(const Fn& p, const Fn& q, const Fn& wgt,
                                 double a, double t1, double t2,
                                 const std::vector<double>& breaks = {}) {
  Shot s = rk4_shoot(p, q, wgt, a, t1, t2, 1.0, 0.0, breaks);
  if (s.zeros.empty()) throw std::runtime_error("oracle: no zero");
  return s.zeros.front();
}

// Last zero < t2 of the right Neumann shot u(t2)=1, u'(t2)=0 (integrated
// left-to-right from t1 would need a terminal condition, so shoot the
// reflected problem instead).
inline double neumann_last_zero(const Fn& p, const Fn& q, const Fn& wgt,
                                double a, double t1, double t2,
                                const std::vector<double>& breaks = {}) {
  auto rp = [&, t1, t2](double t) { return p(t1 + t2 - t); };
  auto rq = [&, t1, t2](double t) { return q(t1 + t2 - t); };
  auto rw = [&, t1, t2](double t) { return wgt(t1 + t2 - t); };
  std::vector<double> rb;
  for (double b : breaks) rb.push_back(t1 + t2 - b);
  Shot s = rk4_shoot(rp, rq, rw, a, t1, t2, 1.0, 0.0, rb);
  if (s.zeros.empty()) throw std::runtime_error("oracle: no zero");
  return t1 + t2 - s.zeros.front();
}

// First zero > s of the Dirichlet shot u(s)=0, u'(s)=1.
inline double dirichlet_next_zero(const Fn& p, const Fn& q, const Fn& wgt,
                                  double a, double s, double t2,
                                  const std::vector<double>& breaks = {}) {
  Shot sh = rk4_shoot(p, q, wgt, a, s, t2, 0.0, p(s), breaks);
  if (sh.zeros.empty()) throw std::runtime_error("oracle: no zero");
  return sh.zeros.front();
}

// Neumann eigenvalue miss function: u'(t2) of the left Neumann shot.
inline double neumann_miss(const Fn& p, const Fn& q, const Fn& wgt, double a,
                           double t1, double t2,
                           const std::vector<double>& breaks = {}) {
  Shot s = rk4_shoot(p, q, wgt, a, t1, t2, 1.0, 0.0, breaks);
  return s.end_w / p(t2);
}

// Bisects the miss function for an eigenvalue inside [lo, hi]; the caller
// supplies a bracket with a sign change.
inline double eigenvalue_in(const Fn& p, const Fn& q, const Fn& wgt,
                            double lo, double hi, double t1, double t2,
                            const std::vector<double>& breaks = {}) {
  double flo = neumann_miss(p, q, wgt, lo, t1, t2, breaks);
  double fhi = neumann_miss(p, q, wgt, hi, t1, t2, breaks);
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::runtime_error("oracle: bracket has no sign change");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double f = neumann_miss(p, q, wgt, mid, t1, t2, breaks);
    if ((f < 0.0) == (fhi < 0.0)) {
      hi = mid;
      fhi = f;
    } else {
      lo = mid;
    }
    if (hi - lo < 1e-13 * (1.0 + std::fabs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

// Solves g(x) = target for increasing or decreasing continuous g by
// bisection on [lo, hi].
inline double solve_monotone(const std::function<double(double)>& g,
                             double lo, double hi, double target,
                             bool increasing) {
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double v = g(mid);
    bool reached = increasing ? v >= target : v <= target;
    if (reached)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-13 * (1.0 + std::fabs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

// ---- Constant-coefficient closed forms on [0, pi], p = m = n = 1, q = 0.

constexpr double kPi = 3.14159265358979323846;

inline double cf_eigenvalue(int k) { return double((k - 1) * (k - 1)); }
inline double cf_psi1(double a) { return kPi / (2.0 * std::sqrt(a)); }
inline double cf_psi2(double a) { return kPi - kPi / (2.0 * std::sqrt(a)); }
inline double cf_phi(double a, double s) { return s + kPi / std::sqrt(a); }

// First curve C_1 in (+,+): half a positive hump plus half a negative hump
// fill the interval, 1/(2 sqrt a) + 1/(2 sqrt b) = 1 after dividing by pi.
inline double cf_first_curve_b(double a) {
  double r = 1.0 - 1.0 / (2.0 * std::sqrt(a));
  return 1.0 / (4.0 * r * r);
}

}  // namespace oracle

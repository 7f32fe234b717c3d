#include "fucik/problem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fucik/errors.hpp"
#include "fucik/ext_real.hpp"

namespace fucik {

std::string ExtReal::str() const {
  if (is_pos_inf()) return "pos_inf";
  if (is_neg_inf()) return "neg_inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v_);
  return buf;
}

namespace {

constexpr double kWeightFloor = 1e-12;  // max|weight| below this is degenerate
constexpr double kQSlack = 1e-12;       // roundoff slack on q >= 0

void require_covers(const CoefficientFn& f, double t1, double t2,
                    const char* name) {
  if (!f.covers(t1, t2))
    throw InvalidProblem(std::string(name) +
                         ": pwlinear points do not cover [t1, t2]");
}

}  // namespace

SLProblem::SLProblem(double t1, double t2, CoefficientFn p, CoefficientFn q,
                     CoefficientFn m, CoefficientFn n, Tolerances tol)
    : t1_(t1),
      t2_(t2),
      p_(std::move(p)),
      q_(std::move(q)),
      m_(std::move(m)),
      n_(std::move(n)),
      tol_(tol) {
  if (!std::isfinite(t1) || !std::isfinite(t2) || !(t1 < t2))
    throw InvalidProblem("interval: need finite t1 < t2");
  require_covers(p_, t1_, t2_, "p");
  require_covers(q_, t1_, t2_, "q");
  require_covers(m_, t1_, t2_, "m");
  require_covers(n_, t1_, t2_, "n");

  p_min_ = p_.min_on(t1_, t2_);
  if (!(p_min_ > 0.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "p: must be positive on [t1, t2] (min %g)",
                  p_min_);
    throw InvalidProblem(buf);
  }
  double q_min = q_.min_on(t1_, t2_);
  if (q_min < -kQSlack) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "q: must be nonnegative on [t1, t2] (min %g)", q_min);
    throw InvalidProblem(buf);
  }
  if (m_.max_abs_on(t1_, t2_) <= kWeightFloor)
    throw InvalidProblem("m: weight is identically zero on [t1, t2]");
  if (n_.max_abs_on(t1_, t2_) <= kWeightFloor)
    throw InvalidProblem("n: weight is identically zero on [t1, t2]");
}

double SLProblem::tau_a(double a) const {
  return tol_.param_abs * (1.0 + std::fabs(a));
}

std::vector<double> SLProblem::breakpoints(WeightSel w) const {
  std::vector<double> bps = p_.breakpoints_in(t1_, t2_);
  for (double t : q_.breakpoints_in(t1_, t2_)) bps.push_back(t);
  for (double t : weight(w).breakpoints_in(t1_, t2_)) bps.push_back(t);
  std::sort(bps.begin(), bps.end());
  double tol = 1e-13 * (1.0 + std::fabs(t1_) + std::fabs(t2_));
  bps.erase(std::unique(bps.begin(), bps.end(),
                        [tol](double a, double b) { return std::fabs(a - b) <= tol; }),
            bps.end());
  return bps;
}

SLProblem SLProblem::reflected() const {
  return SLProblem(-t2_, -t1_, p_.reflected(), q_.reflected(), m_.reflected(),
                   n_.reflected(), tol_);
}

}  // namespace fucik

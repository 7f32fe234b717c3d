#include "fucik/coefficient_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fucik {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kKnotZeroTol = 1e-14;  // knot values this small count as exact zeros

double snap_zero(double y) { return std::fabs(y) <= kKnotZeroTol ? 0.0 : y; }

void sort_dedupe(std::vector<double>& ts, double tol) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end(),
                       [tol](double a, double b) { return std::fabs(a - b) <= tol; }),
           ts.end());
}

}  // namespace

CoefficientFn CoefficientFn::constant(double value) {
  if (!std::isfinite(value)) throw InvalidProblem("constant: value not finite");
  CoefficientFn f(Kind::constant);
  f.params_[0] = value;
  return f;
}

CoefficientFn CoefficientFn::pwlinear(std::vector<Knot> knots) {
  if (knots.size() < 2) throw InvalidProblem("pwlinear: needs at least two points");
  for (size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i].t) || !std::isfinite(knots[i].y))
      throw InvalidProblem("pwlinear: points[" + std::to_string(i) + "] not finite");
    if (i > 0 && !(knots[i].t > knots[i - 1].t))
      throw InvalidProblem("pwlinear: points[" + std::to_string(i) +
                           "] abscissa not strictly increasing");
  }
  CoefficientFn f(Kind::pwlinear);
  f.knots_ = std::move(knots);
  return f;
}

CoefficientFn CoefficientFn::sine(double amplitude, double omega, double phase,
                                  double offset) {
  for (double v : {amplitude, omega, phase, offset})
    if (!std::isfinite(v)) throw InvalidProblem("sine: parameter not finite");
  CoefficientFn f(Kind::sine);
  f.params_ = {amplitude, omega, phase, offset};
  return f;
}

double CoefficientFn::operator()(double t) const {
  switch (kind_) {
    case Kind::constant:
      return params_[0];
    case Kind::sine:
      return params_[0] * std::sin(params_[1] * t + params_[2]) + params_[3];
    case Kind::pwlinear: {
      if (t <= knots_.front().t) return knots_.front().y;
      if (t >= knots_.back().t) return knots_.back().y;
      auto it = std::upper_bound(
          knots_.begin(), knots_.end(), t,
          [](double tv, const Knot& k) { return tv < k.t; });
      const Knot& hi = *it;
      const Knot& lo = *(it - 1);
      double th = (t - lo.t) / (hi.t - lo.t);
      return lo.y + th * (hi.y - lo.y);
    }
  }
  return 0.0;
}

std::vector<double> CoefficientFn::breakpoints_in(double lo, double hi) const {
  std::vector<double> bps;
  if (kind_ == Kind::pwlinear) {
    for (const Knot& k : knots_)
      if (k.t > lo && k.t < hi) bps.push_back(k.t);
  }
  return bps;
}

double CoefficientFn::min_on(double lo, double hi) const {
  switch (kind_) {
    case Kind::constant:
      return params_[0];
    case Kind::pwlinear: {
      double m = std::min((*this)(lo), (*this)(hi));
      for (const Knot& k : knots_)
        if (k.t > lo && k.t < hi) m = std::min(m, k.y);
      return m;
    }
    case Kind::sine: {
      double m = std::min((*this)(lo), (*this)(hi));
      double A = params_[0], w = params_[1], ph = params_[2], off = params_[3];
      if (std::fabs(A) <= kKnotZeroTol || std::fabs(w) <= kKnotZeroTol) return m;
      // stationary points: w t + ph = pi/2 + j pi
      double th_lo = std::min(w * lo + ph, w * hi + ph);
      double th_hi = std::max(w * lo + ph, w * hi + ph);
      long j0 = (long)std::ceil((th_lo - 0.5 * kPi) / kPi);
      for (long j = j0; 0.5 * kPi + (double)j * kPi <= th_hi; ++j)
        m = std::min(m, ((j % 2 + 2) % 2 == 0 ? A : -A) + off);
      return m;
    }
  }
  return 0.0;
}

double CoefficientFn::max_on(double lo, double hi) const {
  CoefficientFn neg = *this;
  switch (kind_) {
    case Kind::constant:
      return params_[0];
    case Kind::pwlinear:
      for (Knot& k : neg.knots_) k.y = -k.y;
      return -neg.min_on(lo, hi);
    case Kind::sine:
      neg.params_[0] = -params_[0];
      neg.params_[3] = -params_[3];
      return -neg.min_on(lo, hi);
  }
  return 0.0;
}

double CoefficientFn::max_abs_on(double lo, double hi) const {
  return std::max(std::fabs(min_on(lo, hi)), std::fabs(max_on(lo, hi)));
}

double CoefficientFn::integral_on(double lo, double hi) const {
  if (hi < lo) return -integral_on(hi, lo);
  switch (kind_) {
    case Kind::constant:
      return params_[0] * (hi - lo);
    case Kind::sine: {
      double A = params_[0], w = params_[1], ph = params_[2], off = params_[3];
      if (std::fabs(w) <= kKnotZeroTol)
        return (A * std::sin(ph) + off) * (hi - lo);
      return off * (hi - lo) -
             A / w * (std::cos(w * hi + ph) - std::cos(w * lo + ph));
    }
    case Kind::pwlinear: {
      // trapezoid per covered segment, clipped to [lo, hi]
      double total = 0.0;
      auto add = [&](double ta, double ya, double tb, double yb) {
        if (!(tb > ta)) return;
        double a = std::max(ta, lo), b = std::min(tb, hi);
        if (b <= a) return;
        double slope = (yb - ya) / (tb - ta);
        double fa = ya + slope * (a - ta);
        double fb = ya + slope * (b - ta);
        total += 0.5 * (fa + fb) * (b - a);
      };
      // constant extensions beyond the knot range
      add(lo, knots_.front().y, knots_.front().t, knots_.front().y);
      for (size_t i = 0; i + 1 < knots_.size(); ++i)
        add(knots_[i].t, knots_[i].y, knots_[i + 1].t, knots_[i + 1].y);
      add(knots_.back().t, knots_.back().y, hi, knots_.back().y);
      return total;
    }
  }
  return 0.0;
}

std::vector<double> CoefficientFn::roots_in(double lo, double hi) const {
  std::vector<double> roots;
  double span_tol = 1e-13 * (1.0 + std::fabs(lo) + std::fabs(hi));
  switch (kind_) {
    case Kind::constant:
      break;  // either no roots or an identically-zero plateau
    case Kind::pwlinear: {
      // walk segments clipped to [lo, hi]; knot values snap to exact zero
      std::vector<double> ts{lo, hi};
      for (const Knot& k : knots_)
        if (k.t > lo && k.t < hi) ts.push_back(k.t);
      std::sort(ts.begin(), ts.end());
      for (size_t i = 0; i + 1 < ts.size(); ++i) {
        double ta = ts[i], tb = ts[i + 1];
        double ya = snap_zero((*this)(ta)), yb = snap_zero((*this)(tb));
        if (ya == 0.0 && yb == 0.0) continue;  // plateau, not isolated roots
        if (ya == 0.0) roots.push_back(ta);
        else if (yb == 0.0) roots.push_back(tb);
        else if ((ya > 0) != (yb > 0))
          roots.push_back(ta + (tb - ta) * (ya / (ya - yb)));
      }
      break;
    }
    case Kind::sine: {
      double A = params_[0], w = params_[1], ph = params_[2], off = params_[3];
      if (std::fabs(A) <= kKnotZeroTol || std::fabs(w) <= kKnotZeroTol) break;
      double r = -off / A;
      if (std::fabs(r) > 1.0) break;
      double th1 = std::asin(r);            // in [-pi/2, pi/2]
      double th2 = kPi - th1;               // the mirrored branch
      double th_lo = std::min(w * lo + ph, w * hi + ph);
      double th_hi = std::max(w * lo + ph, w * hi + ph);
      for (double base : {th1, th2}) {
        long j0 = (long)std::ceil((th_lo - base) / (2.0 * kPi) - 1e-12);
        for (long j = j0; base + 2.0 * kPi * (double)j <= th_hi + 1e-12; ++j) {
          double th = base + 2.0 * kPi * (double)j;
          double t = (th - ph) / w;
          if (t >= lo - span_tol && t <= hi + span_tol)
            roots.push_back(std::clamp(t, lo, hi));
        }
      }
      break;
    }
  }
  sort_dedupe(roots, span_tol);
  return roots;
}

std::vector<std::array<double, 2>> CoefficientFn::plateaus_in(double lo,
                                                              double hi) const {
  std::vector<std::array<double, 2>> out;
  if (kind_ == Kind::constant) {
    if (snap_zero(params_[0]) == 0.0) out.push_back({lo, hi});
    return out;
  }
  if (kind_ != Kind::pwlinear) return out;
  // maximal runs of segments with both (snapped) knot values zero,
  // including the constant extensions beyond the knot range
  std::vector<double> ts{lo, hi};
  for (const Knot& k : knots_)
    if (k.t > lo && k.t < hi) ts.push_back(k.t);
  std::sort(ts.begin(), ts.end());
  double run_lo = 0.0;
  bool in_run = false;
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    bool zero_seg = snap_zero((*this)(ts[i])) == 0.0 &&
                    snap_zero((*this)(ts[i + 1])) == 0.0 &&
                    snap_zero((*this)(0.5 * (ts[i] + ts[i + 1]))) == 0.0;
    if (zero_seg && !in_run) {
      in_run = true;
      run_lo = ts[i];
    } else if (!zero_seg && in_run) {
      in_run = false;
      out.push_back({run_lo, ts[i]});
    }
  }
  if (in_run) out.push_back({run_lo, ts.back()});
  return out;
}

CoefficientFn CoefficientFn::reflected() const {
  switch (kind_) {
    case Kind::constant:
      return *this;
    case Kind::sine:
      return sine(params_[0], -params_[1], params_[2], params_[3]);
    case Kind::pwlinear: {
      std::vector<Knot> rk(knots_.rbegin(), knots_.rend());
      for (Knot& k : rk) k.t = -k.t;
      return pwlinear(std::move(rk));
    }
  }
  return *this;
}

bool CoefficientFn::covers(double lo, double hi) const {
  if (kind_ != Kind::pwlinear) return true;
  double slack = 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi));
  return knots_.front().t <= lo + slack && knots_.back().t >= hi - slack;
}

bool operator==(const CoefficientFn& a, const CoefficientFn& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == CoefficientFn::Kind::pwlinear) {
    if (a.knots_.size() != b.knots_.size()) return false;
    for (size_t i = 0; i < a.knots_.size(); ++i)
      if (a.knots_[i].t != b.knots_[i].t || a.knots_[i].y != b.knots_[i].y)
        return false;
    return true;
  }
  return a.params_ == b.params_;
}

}  // namespace fucik

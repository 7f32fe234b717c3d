#pragma once

#include <compare>
#include <string>

#include "fucik/errors.hpp"

namespace fucik {

/// Extended real value: either finite, +infinity, or -infinity.
///
/// Zero searches return pos_inf ("no zero to the right") or neg_inf ("no
/// zero to the left") as honest sentinels; infinities are never produced by
/// arithmetic overflow.  The total order is neg_inf < any finite < pos_inf,
/// which is exactly what the monotone bisections in the curve solvers rely
/// on.  Subtraction keeps whatever sign information survives: a finite
/// difference when both sides are finite, a signed infinity when exactly one
/// side is infinite or the infinities oppose, and a NoInformation error for
/// like-signed infinities (the one indeterminate case).
class ExtReal {
 public:
  ExtReal() : tag_(Tag::finite), v_(0.0) {}

  static ExtReal finite(double v) { return ExtReal(Tag::finite, v); }
  static ExtReal pos_inf() { return ExtReal(Tag::pos_inf, 0.0); }
  static ExtReal neg_inf() { return ExtReal(Tag::neg_inf, 0.0); }

  bool is_finite() const { return tag_ == Tag::finite; }
  bool is_pos_inf() const { return tag_ == Tag::pos_inf; }
  bool is_neg_inf() const { return tag_ == Tag::neg_inf; }
  bool is_infinite() const { return tag_ != Tag::finite; }

  /// Finite payload; throws if infinite.
  double value() const {
    if (!is_finite()) throw Error("ExtReal::value() on an infinite value");
    return v_;
  }

  /// Finite payload, or the given fallback when infinite.
  double value_or(double fallback) const { return is_finite() ? v_ : fallback; }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != Tag::finite || a.v_ == b.v_;
  }

  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.tag_ == b.tag_) return a.tag_ == Tag::finite && a.v_ < b.v_;
    if (a.tag_ == Tag::neg_inf) return true;
    if (b.tag_ == Tag::pos_inf) return true;
    return false;
  }
  friend bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  /// Difference in the extended sense; throws NoInformation for
  /// (+inf) - (+inf) and (-inf) - (-inf).
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) {
    if (a.is_finite() && b.is_finite()) return finite(a.v_ - b.v_);
    if (a.is_pos_inf()) {
      if (b.is_pos_inf()) throw NoInformation("pos_inf - pos_inf");
      return pos_inf();
    }
    if (a.is_neg_inf()) {
      if (b.is_neg_inf()) throw NoInformation("neg_inf - neg_inf");
      return neg_inf();
    }
    // a finite, b infinite
    return b.is_pos_inf() ? neg_inf() : pos_inf();
  }

  /// -1, 0, +1 (infinities map to -1/+1).
  int sign() const {
    if (is_pos_inf()) return 1;
    if (is_neg_inf()) return -1;
    return v_ > 0.0 ? 1 : (v_ < 0.0 ? -1 : 0);
  }

  std::string str() const;

 private:
  enum class Tag { neg_inf, finite, pos_inf };
  ExtReal(Tag tag, double v) : tag_(tag), v_(v) {}

  Tag tag_;
  double v_;
};

}  // namespace fucik

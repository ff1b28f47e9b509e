#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>

namespace uvr {

/// A real value extended with +infinity / -infinity as explicit tags.
///
/// Several of the sharp bounds in this library are genuinely infinite
/// (e.g. the supremum functionals over the full disk).  Keeping the tag
/// explicit separates "the value is infinite" from an IEEE overflow, so a
/// finite value that blew up in a formula is always a bug, never a result.
class ExtendedReal {
 public:
  ExtendedReal() : tag_(Tag::finite), value_(0.0) {}

  /// Finite value; rejects IEEE infinities and NaN.
  static ExtendedReal finite(double v) {
    if (!std::isfinite(v))
      throw std::invalid_argument("ExtendedReal::finite: value is not finite");
    return ExtendedReal(Tag::finite, v);
  }
  static ExtendedReal pos_inf() { return ExtendedReal(Tag::pos_inf, 0.0); }
  static ExtendedReal neg_inf() { return ExtendedReal(Tag::neg_inf, 0.0); }

  bool is_finite() const { return tag_ == Tag::finite; }
  bool is_pos_inf() const { return tag_ == Tag::pos_inf; }
  bool is_neg_inf() const { return tag_ == Tag::neg_inf; }

  /// Finite payload; throws on an infinite value instead of coercing.
  double value() const {
    if (tag_ != Tag::finite)
      throw std::domain_error("ExtendedReal::value: value is infinite");
    return value_;
  }

  ExtendedReal operator-() const {
    switch (tag_) {
      case Tag::pos_inf: return neg_inf();
      case Tag::neg_inf: return pos_inf();
      default: return finite(-value_);
    }
  }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.tag_ != b.tag_) return false;
    return a.tag_ != Tag::finite || a.value_ == b.value_;
  }

  /// Total order with -inf < finite < +inf.
  friend std::strong_ordering operator<=>(const ExtendedReal& a,
                                          const ExtendedReal& b) {
    auto rank = [](Tag t) { return t == Tag::neg_inf ? -1 : t == Tag::finite ? 0 : 1; };
    if (int ra = rank(a.tag_), rb = rank(b.tag_); ra != rb)
      return ra <=> rb;
    if (a.tag_ != Tag::finite) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Scale by a nonzero finite factor.  0 * inf has no meaning here and throws.
  friend ExtendedReal operator*(double s, const ExtendedReal& x) {
    if (!std::isfinite(s))
      throw std::invalid_argument("ExtendedReal: scale factor must be finite");
    if (x.tag_ == Tag::finite) return finite(s * x.value_);
    if (s == 0.0)
      throw std::domain_error("ExtendedReal: 0 * infinity is undefined");
    const bool pos = (s > 0.0) == (x.tag_ == Tag::pos_inf);
    return pos ? pos_inf() : neg_inf();
  }

 private:
  enum class Tag { finite, pos_inf, neg_inf };
  ExtendedReal(Tag t, double v) : tag_(t), value_(v) {}

  Tag tag_;
  double value_;
};

inline std::strong_ordering extended_compare(const ExtendedReal& a,
                                             const ExtendedReal& b) {
  return a <=> b;
}

}  // namespace uvr

#pragma once

#include <compare>
#include <string>

namespace tslab {

/// Extended real with explicit +/-infinity sentinels. Finite values are
/// compared as doubles; infinities never enter floating-point arithmetic.
class ExtReal {
 public:
  enum class Kind { neg_inf = 0, finite = 1, pos_inf = 2 };

  constexpr ExtReal() = default;  // finite zero
  static ExtReal finite(double v);
  static constexpr ExtReal pos_inf() { return ExtReal(Kind::pos_inf, 0.0); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::neg_inf, 0.0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// Finite value; throws InvalidInput on a sentinel.
  double value() const;

  /// "+inf", "-inf", or the shortest round-tripping decimal.
  std::string to_string() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend std::weak_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.kind_ != Kind::finite || a.value_ == b.value_) return std::weak_ordering::equivalent;
    return a.value_ < b.value_ ? std::weak_ordering::less : std::weak_ordering::greater;
  }

  /// +inf + -inf is undefined and throws InvalidInput.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a);

 private:
  constexpr ExtReal(Kind k, double v) : kind_(k), value_(v) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

}  // namespace tslab

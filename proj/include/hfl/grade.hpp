#pragma once

#include <compare>
#include <string_view>

#include "hfl/error.hpp"
#include "hfl/rational.hpp"

namespace hfl {

/**
 * A membership grade: an exact rational in [0,1].
 *
 * Order and equality are exact. The step kernel used by the discrete
 * dominance function is discontinuous at equal arguments, so no tolerance
 * is ever applied to grade comparisons.
 */
class Grade {
 public:
  explicit Grade(Rational value) : value_(value) {
    if (value_ < Rational(0) || value_ > Rational(1)) {
      throw RangeError("grade out of range [0,1]: " + value_.to_fraction_string());
    }
  }

  static Grade from_decimal(std::string_view text) { return Grade(Rational::from_decimal(text)); }

  const Rational& value() const { return value_; }

  /// 1 - a, the pointwise complement.
  Grade complement() const { return Grade(Rational(1) - value_); }

  bool operator==(const Grade& o) const = default;
  std::strong_ordering operator<=>(const Grade& o) const { return value_ <=> o.value_; }

  std::string to_decimal(int precision) const { return value_.to_decimal(precision); }

 private:
  Rational value_;
};

inline Grade midpoint(const Grade& a, const Grade& b) {
  return Grade((a.value() + b.value()) / Rational(2));
}

}  // namespace hfl

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hfl {

/**
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Always stored in canonical form: denominator > 0, gcd(|num|, den) == 1.
 * All arithmetic goes through 128-bit intermediates and throws OverflowError
 * if a canonical result no longer fits in 64 bits. Membership grades, kernel
 * values and table averages in this library stay tiny, so the bound is never
 * reached in practice; the check turns a silent wraparound into a loud error.
 *
 * Comparisons are exact. There is deliberately no implicit conversion from
 * floating point: decimal data enters via from_decimal so that 0.1 means
 * exactly 1/10.
 */
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t integer) : num_(integer), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  /// Parses a decimal token exactly: [+-]digits[.digits][(e|E)[+-]digits].
  /// "0.1" -> 1/10, "2.50e-1" -> 1/4. Throws ParseError on malformed input.
  static Rational from_decimal(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws OverflowError on /0
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Fixed-point decimal rendering with round-half-even at `precision`
  /// fractional digits (0..18). "19/40" at 4 -> "0.4750".
  std::string to_decimal(int precision) const;

  /// Exact "num/den" form, or plain integer when den == 1.
  std::string to_fraction_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;

  static Rational make_reduced(__int128 num, __int128 den);
  friend struct std::hash<Rational>;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hfl

template <>
struct std::hash<hfl::Rational> {
  std::size_t operator()(const hfl::Rational& r) const noexcept {
    std::size_t h1 = std::hash<std::int64_t>{}(r.num_);
    std::size_t h2 = std::hash<std::int64_t>{}(r.den_);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

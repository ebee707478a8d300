#include "hfl/rational.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <ostream>

#include "hfl/error.hpp"

namespace hfl {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMaxI64 = std::numeric_limits<std::int64_t>::max();

i128 pow10_128(int e) {
  i128 p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational Rational::make_reduced(i128 num, i128 den) {
  if (den == 0) throw OverflowError("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  num /= static_cast<i128>(g);
  den /= static_cast<i128>(g);
  if (num > kMaxI64 || num < -kMaxI64 || den > kMaxI64) {
    throw OverflowError("rational: value exceeds 64-bit canonical form");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = make_reduced(num, den);
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                      static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw OverflowError("rational: division by zero");
  return make_reduced(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  i128 lhs = static_cast<i128>(num_) * o.den_;
  i128 rhs = static_cast<i128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::from_decimal(std::string_view text) {
  const auto fail = [&] { throw ParseError("not a decimal numeral: '" + std::string(text) + "'"); };

  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }

  i128 mantissa = 0;
  int digits = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) fail();
      seen_dot = true;
      continue;
    }
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    if (digits >= 36) throw OverflowError("decimal numeral too long: '" + std::string(text) + "'");
    mantissa = mantissa * 10 + (c - '0');
    ++digits;
    if (seen_dot) ++frac_digits;
  }
  if (digits == 0) fail();

  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_neg = text[i] == '-';
      ++i;
    }
    if (i == text.size()) fail();
    int e = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail();
      e = e * 10 + (text[i] - '0');
      if (e > 40) throw OverflowError("decimal exponent too large");
    }
    exponent = exp_neg ? -e : e;
  }
  if (i != text.size()) fail();

  int shift = exponent - frac_digits;
  i128 num = negative ? -mantissa : mantissa;
  i128 den = 1;
  if (shift > 0) {
    if (shift > 20) throw OverflowError("decimal exponent too large");
    num *= pow10_128(shift);
  } else if (shift < 0) {
    if (shift < -36) throw OverflowError("decimal exponent too small");
    den = pow10_128(-shift);
  }
  return make_reduced(num, den);
}

std::string Rational::to_decimal(int precision) const {
  if (precision < 0 || precision > 18) {
    throw RangeError("decimal precision must be in 0..18");
  }
  bool negative = num_ < 0;
  u128 n = uabs(num_);
  u128 d = static_cast<u128>(den_);
  u128 scale = 1;
  for (int i = 0; i < precision; ++i) scale *= 10;

  u128 scaled = n * scale;
  u128 q = scaled / d;
  u128 rem = scaled % d;
  // Round half to even on the last rendered digit.
  u128 twice = rem * 2;
  if (twice > d || (twice == d && (q % 2) == 1)) ++q;

  u128 whole = q / scale;
  u128 frac = q % scale;

  std::string whole_s;
  if (whole == 0) {
    whole_s = "0";
  } else {
    while (whole > 0) {
      whole_s.insert(whole_s.begin(), static_cast<char>('0' + static_cast<int>(whole % 10)));
      whole /= 10;
    }
  }
  std::string out = negative && (q != 0) ? "-" : "";
  out += whole_s;
  if (precision > 0) {
    std::string frac_s(static_cast<std::size_t>(precision), '0');
    for (int i = precision - 1; i >= 0 && frac > 0; --i) {
      frac_s[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
      frac /= 10;
    }
    out += "." + frac_s;
  }
  return out;
}

std::string Rational::to_fraction_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_fraction_string();
}

}  // namespace hfl

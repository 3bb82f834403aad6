#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gensum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Arithmetic never rounds.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input or a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  double to_double() const;
  long double to_long_double() const;

  /// "p/q" in lowest terms; integers render without a denominator ("0", "-3").
  std::string str() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(Raw{}, -value_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Integer power; negative exponents invert (throws on 0^-n).
  Rational pow(std::int64_t exponent) const;
  /// Largest integer not above the value.
  BigInt floor() const;
  /// Value minus its floor, in [0, 1).
  Rational fractional_part() const;

 private:
  using Impl = boost::multiprecision::cpp_rational;
  struct Raw {};
  Rational(Raw, Impl v) : value_(std::move(v)) {}

  Impl value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace gensum

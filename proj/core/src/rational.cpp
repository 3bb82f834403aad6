#include "gensum/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <ostream>
#include <stdexcept>

namespace gensum {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::size_t start = (digits.front() == '-' || digits.front() == '+') ? 1 : 0;
  if (start == digits.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(digits.substr(start)));
  return digits.front() == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = den < 0 ? Impl(BigInt(-num), BigInt(-den)) : Impl(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

double Rational::to_double() const {
  // Route through a wide binary float so huge numerators and denominators
  // still round correctly.
  using Wide = boost::multiprecision::cpp_bin_float_100;
  Wide n(numerator());
  Wide d(denominator());
  return static_cast<double>(n / d);
}

long double Rational::to_long_double() const {
  using Wide = boost::multiprecision::cpp_bin_float_100;
  Wide n(numerator());
  Wide d(denominator());
  return static_cast<long double>(n / d);
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  Impl result{1};
  Impl base = value_;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return Rational(Raw{}, result);
}

BigInt Rational::floor() const {
  BigInt n = numerator();
  BigInt d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rational Rational::fractional_part() const { return *this - Rational(floor()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace gensum

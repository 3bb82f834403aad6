#include "gensum/periodic_polynomial.hpp"

#include <cmath>

namespace gensum {

PeriodicPolynomial::PeriodicPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void PeriodicPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  rounded_.clear();
  for (const auto& c : coeffs_) rounded_.push_back(c.to_double());
}

Rational PeriodicPolynomial::in_fraction(const Rational& u) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double PeriodicPolynomial::in_fraction(double u) const {
  double acc = 0.0;
  for (auto it = rounded_.rbegin(); it != rounded_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double PeriodicPolynomial::operator()(double x) const { return in_fraction(x - std::floor(x)); }

std::vector<double> PeriodicPolynomial::coeffs_as_double() const { return rounded_; }

Rational periodic_mean(const PeriodicPolynomial& p) {
  Rational mean;
  const auto& c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) mean += c[j] / Rational(static_cast<std::int64_t>(j + 1));
  return mean;
}

}  // namespace gensum

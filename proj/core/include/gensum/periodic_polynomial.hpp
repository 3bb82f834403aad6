#pragma once

#include "gensum/rational.hpp"

#include <cstddef>
#include <vector>

namespace gensum {

/// Polynomial in the fractional part u = {x}, with exact coefficients
/// (coefficient j multiplies u^j). Evaluating at x applies the
/// fractional-part map first, so the result has period 1 in x.
class PeriodicPolynomial {
 public:
  PeriodicPolynomial() = default;
  explicit PeriodicPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Degree of the trimmed coefficient list; the zero polynomial reports 0.
  std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Raw polynomial value at u (no fractional-part reduction).
  Rational in_fraction(const Rational& u) const;
  double in_fraction(double u) const;

  /// Periodic value p({x}).
  Rational operator()(const Rational& x) const { return in_fraction(x.fractional_part()); }
  double operator()(double x) const;

  /// Coefficients rounded to double, for fast evaluation.
  std::vector<double> coeffs_as_double() const;

  friend bool operator==(const PeriodicPolynomial&, const PeriodicPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  std::vector<double> rounded_;
};

/// Exact mean of p({x}) over one period: sum of coeffs[j] / (j + 1).
Rational periodic_mean(const PeriodicPolynomial& p);

}  // namespace gensum

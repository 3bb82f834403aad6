#include "gensum/exact_core.hpp"

#include <stdexcept>
#include <string>

namespace gensum {

BernoulliTable::BernoulliTable() { values_.emplace_back(1); }

Rational BernoulliTable::operator()(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be non-negative");
  std::lock_guard lock(mutex_);
  extend_to(static_cast<std::size_t>(n));
  return values_[static_cast<std::size_t>(n)];
}

std::size_t BernoulliTable::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

std::vector<Rational> BernoulliTable::snapshot() const {
  std::lock_guard lock(mutex_);
  return values_;
}

void BernoulliTable::extend_to(std::size_t n) {
  while (values_.size() <= n) {
    const auto next = static_cast<std::int64_t>(values_.size());
    if (next >= 3 && next % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    Rational acc;
    for (std::int64_t k = 0; k < next; ++k) {
      if (values_[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += Rational(binomial(next + 1, k)) * values_[static_cast<std::size_t>(k)];
    }
    values_.push_back(-acc / Rational(next + 1));
  }
}

Rational bernoulli(std::int64_t n) {
  static BernoulliTable table;
  return table(n);
}

Rational faulhaber_sum(std::int64_t n, std::int64_t m) {
  if (n < 1) throw std::invalid_argument("faulhaber_sum requires exponent n >= 1, got " + std::to_string(n));
  if (m < 1) throw std::invalid_argument("faulhaber_sum requires bound m >= 1, got " + std::to_string(m));
  const Rational mm(m);
  Rational acc;
  for (std::int64_t k = 0; k <= n; ++k) {
    Rational b = bernoulli(k);
    if (b.is_zero()) continue;
    acc += Rational(binomial(n + 1, k)) * b * mm.pow(n - k + 1);
  }
  return acc / Rational(n + 1);
}

Rational zeta_neg_int(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("zeta_neg_int requires n >= 0");
  if (n == 0) return Rational(-1, 2);
  return -bernoulli(n + 1) / Rational(n + 1);
}

namespace {

// Coefficients of (1 - u)^e in powers of u.
std::vector<Rational> one_minus_u_power(std::int64_t e) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(e + 1));
  for (std::int64_t j = 0; j <= e; ++j) {
    Rational term(binomial(e, j));
    c.push_back(j % 2 == 0 ? term : -term);
  }
  return c;
}

}  // namespace

PeriodicPolynomial pm_polynomial(std::int64_t n, std::int64_t m) {
  if (n < 1) throw std::out_of_range("pm_polynomial requires n >= 1, got " + std::to_string(n));
  if (m < 0 || m > n) {
    throw std::out_of_range("pm_polynomial index m=" + std::to_string(m) + " outside 0.." + std::to_string(n));
  }
  // Expand (1/(n+1)) sum_k C(n+1,k) B_k (x + 1 - u)^{n-k+1} in x; the x^m
  // coefficient is (1/(n+1)) sum_k C(n+1,k) C(n-k+1,m) B_k (1-u)^{n-k-m+1}.
  std::vector<Rational> coeffs(static_cast<std::size_t>(n - m + 2));
  for (std::int64_t k = 0; k <= n - m + 1; ++k) {
    if (k > n) break;
    Rational b = bernoulli(k);
    if (b.is_zero()) continue;
    Rational scale = Rational(binomial(n + 1, k)) * Rational(binomial(n - k + 1, m)) * b;
    auto power = one_minus_u_power(n - k - m + 1);
    for (std::size_t j = 0; j < power.size(); ++j) coeffs[j] += scale * power[j];
  }
  const Rational norm(n + 1);
  for (auto& c : coeffs) c /= norm;
  return PeriodicPolynomial(std::move(coeffs));
}

}  // namespace gensum

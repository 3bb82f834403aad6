#include "gensum/cesaro_series.hpp"

#include "doctest.h"

#include <cmath>
#include <stdexcept>

using gensum::SeriesSpec;

namespace {

SeriesSpec alt_sign() {
  return {[](std::int64_t n) { return (n % 2 == 0) ? 1.0L : -1.0L; }, 0, {}};
}
SeriesSpec alt_sign_n() {
  return {[](std::int64_t n) { return (n % 2 == 0) ? static_cast<long double>(n) : -static_cast<long double>(n); }, 0,
          {}};
}
SeriesSpec geometric(long double r) {
  return {[r](std::int64_t n) { return std::pow(r, static_cast<long double>(n)); }, 0, {}};
}
SeriesSpec inverse_square() {
  return {[](std::int64_t n) { return 1.0L / (static_cast<long double>(n) * n); }, 1, M_PI * M_PI / 6.0};
}
SeriesSpec alternating_harmonic() {
  return {[](std::int64_t n) { return ((n % 2 == 1) ? 1.0L : -1.0L) / static_cast<long double>(n); }, 1, M_LN2};
}

}  // namespace

TEST_CASE("iterated_partial_sums: hand oracles") {
  const auto a = gensum::iterated_partial_sums(alt_sign(), 1, 4);
  REQUIRE(a.size() == 5);
  const long double expected[] = {1, 1, 2, 2, 3};
  for (int i = 0; i < 5; ++i) CHECK(a[static_cast<std::size_t>(i)] == expected[i]);

  SeriesSpec zero{[](std::int64_t) { return 0.0L; }, 0, {}};
  for (int k = 0; k <= 4; ++k) {
    for (long double v : gensum::iterated_partial_sums(zero, k, 30)) CHECK(v == 0.0L);
  }

  SeriesSpec ones{[](std::int64_t) { return 1.0L; }, 0, {}};
  const auto b = gensum::iterated_partial_sums(ones, 1, 100);
  for (std::int64_t n = 0; n <= 100; ++n) CHECK(b[static_cast<std::size_t>(n)] == (n + 1) * (n + 2) / 2);
}

TEST_CASE("iterated_partial_sums: k=2 on (-1)^n n against the closed form") {
  // A_n^0 = -(n+1)/2 for odd n, n/2 for even n. Two more prefix passes by hand.
  const auto got = gensum::iterated_partial_sums(alt_sign_n(), 2, 20);
  long double a0 = 0, a1 = 0, a2 = 0;
  for (std::int64_t n = 0; n <= 20; ++n) {
    a0 = (n % 2 == 0) ? n / 2.0L : -(n + 1) / 2.0L;
    a1 += a0;
    a2 += a1;
    CHECK(got[static_cast<std::size_t>(n)] == a2);
  }
  // Even n: A_n^2 = (n+2)^2/8 - ... check two explicit values.
  CHECK(got[0] == 0.0L);
  CHECK(got[3] == -3.0L);  // A^0 = 0,-1,1,-2 ; A^1 = 0,-1,0,-2 ; A^2 = 0,-1,-1,-3
}

TEST_CASE("iterated_partial_sums: overflow propagates") {
  const auto v = gensum::iterated_partial_sums(geometric(1e300L), 0, 40);
  CHECK(std::isinf(static_cast<double>(v.back())));
}

TEST_CASE("cesaro_sum: examples") {
  const auto a = gensum::cesaro_sum(alt_sign(), 1, 10000, 1e-3);
  CHECK(a.converged);
  CHECK(a.value == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(a.order == 1);

  const auto b = gensum::cesaro_sum(alt_sign_n(), 2, 100000, 1e-3);
  CHECK(b.converged);
  CHECK(std::abs(b.value + 0.25) < 1e-3);

  const auto c = gensum::cesaro_sum(geometric(0.5L), 0, 200, 1e-12);
  CHECK(c.converged);
  CHECK(std::abs(c.value - 2.0) < 1e-12);
}

TEST_CASE("cesaro_sum: evaluation record invariants") {
  for (int k = 0; k <= 3; ++k) {
    const auto e = gensum::cesaro_sum(alt_sign(), k, 500, 1e-2);
    CHECK(e.trace.size() >= 2);
    CHECK(e.n_terms == 501);
    if (e.converged) CHECK(e.error_estimate <= 1e-2);
  }
  CHECK_FALSE(gensum::cesaro_sum(alt_sign(), 0, 500, 1e-2).converged);
}

TEST_CASE("cesaro_sum: divergence is a result, invalid arguments throw") {
  const auto e = gensum::cesaro_sum(geometric(2.0L), 3, 2000, 1e-6);
  CHECK_FALSE(e.converged);
  CHECK_THROWS_AS(gensum::cesaro_sum(alt_sign(), -1, 100, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(gensum::cesaro_sum(alt_sign(), 1, 4, 1e-6), std::invalid_argument);
}

TEST_CASE("cesaro_sum: exact binomial normalization at small N") {
  // C_n^1 of (-1)^n is exactly 1/2 at odd n and (n+2)/(2(n+1)) at even n.
  const auto e = gensum::cesaro_sum(alt_sign(), 1, 9, 1.0);
  CHECK(e.value == doctest::Approx(0.5).epsilon(1e-15));
  const auto even = gensum::cesaro_sum(alt_sign(), 1, 10, 1.0);
  CHECK(even.value == doctest::Approx(12.0 / 22.0).epsilon(1e-15));
}

TEST_CASE("detect_order: examples") {
  const auto a = gensum::detect_order(alt_sign(), 4, 10000, 1e-3);
  REQUIRE(a.has_value());
  CHECK(a->first == 1);

  for (int k_max = 0; k_max <= 6; ++k_max) CHECK_FALSE(gensum::detect_order(geometric(2.0L), k_max, 1000, 1e-3));

  const auto c = gensum::detect_order(inverse_square(), 3, 100000, 1e-4);
  REQUIRE(c.has_value());
  CHECK(c->first == 0);
}

TEST_CASE("consistency: convergent series agree across k = 0..3") {
  const double tol = 1e-4;
  for (const auto& s : {inverse_square(), geometric(0.5L), alternating_harmonic()}) {
    const double exact = s.known_sum.value_or(2.0);
    for (int k = 0; k <= 3; ++k) {
      const auto e = gensum::cesaro_sum(s, k, 200000, tol);
      CAPTURE(k);
      CHECK(std::abs(e.value - exact) <= 10 * tol);
    }
  }
}

TEST_CASE("monotone smoothing: (C,1) oscillates less than (C,0) for (-1)^n") {
  const double osc0 = gensum::cesaro_oscillation(alt_sign(), 0, 100, 1000);
  const double osc1 = gensum::cesaro_oscillation(alt_sign(), 1, 100, 1000);
  CHECK(osc0 == doctest::Approx(1.0));
  CHECK(osc1 < osc0);
}

TEST_CASE("asymptotic normalization approaches the binomial one") {
  const long double asym = gensum::asymptotic_cesaro_mean(alt_sign(), 1, 100001);
  CHECK(static_cast<double>(asym) == doctest::Approx(0.5).epsilon(1e-4));
}

#pragma once

#include "gensum/cesaro_evaluation.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace gensum {

/// A real series sum_{j >= 0} a_j whose terms come from a deterministic
/// generator. The generator is called with the natural index
/// `first_index + j`, so a series starting at n = 1 declares first_index = 1.
struct SeriesSpec {
  std::function<long double(std::int64_t)> term;
  std::int64_t first_index = 0;
  std::optional<double> known_sum;
};

/// A_n^k for n = 0..N: k prefix-sum passes over A_n^0 = sum_{j<=n} a_j.
/// Overflow to infinity propagates into the result untouched.
std::vector<long double> iterated_partial_sums(const SeriesSpec& s, int k, std::int64_t N);

/// (C,k) mean at N terms, C_N^k = A_N^k / C(N+k, k), with the verdict taken
/// from the spread of the last max(8, N/10) means.
/// Requires k >= 0 and N >= 8; throws std::invalid_argument otherwise.
CesaroEvaluation cesaro_sum(const SeriesSpec& s, int k, std::int64_t N, double tol);

/// Smallest k <= k_max for which cesaro_sum converges, with its evaluation.
/// Stops early once the means overflow.
std::optional<std::pair<int, CesaroEvaluation>> detect_order(const SeriesSpec& s, int k_max, std::int64_t N,
                                                             double tol);

/// Spread of C_n^k over n in [n_lo, n_hi]; a smoothing diagnostic.
double cesaro_oscillation(const SeriesSpec& s, int k, std::int64_t n_lo, std::int64_t n_hi);

/// The asymptotic normalization k! A_N^k / N^k, kept as a cross-check of the
/// exact binomial form.
long double asymptotic_cesaro_mean(const SeriesSpec& s, int k, std::int64_t N);

}  // namespace gensum

#include "gensum/cesaro_series.hpp"

#include "gensum/compensated.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gensum {

namespace {

void prefix_sum_in_place(std::vector<long double>& v) {
  CompensatedSum<long double> acc;
  for (auto& x : v) {
    acc += x;
    x = acc.value();
  }
}

// C(n+k, k) in floating point.
long double binomial_norm(std::int64_t n, int k) {
  long double c = 1.0L;
  for (int i = 1; i <= k; ++i) c *= static_cast<long double>(n + i) / static_cast<long double>(i);
  return c;
}

std::vector<long double> cesaro_means(const SeriesSpec& s, int k, std::int64_t N) {
  auto a = iterated_partial_sums(s, k, N);
  for (std::int64_t n = 0; n <= N; ++n) a[static_cast<std::size_t>(n)] /= binomial_norm(n, k);
  return a;
}

}  // namespace

std::vector<long double> iterated_partial_sums(const SeriesSpec& s, int k, std::int64_t N) {
  if (k < 0) throw std::invalid_argument("Cesaro order k must be non-negative");
  if (N < 1) throw std::invalid_argument("iterated_partial_sums needs N >= 1");
  if (!s.term) throw std::invalid_argument("series has no term generator");
  std::vector<long double> a(static_cast<std::size_t>(N + 1));
  for (std::int64_t j = 0; j <= N; ++j) a[static_cast<std::size_t>(j)] = s.term(s.first_index + j);
  for (int pass = 0; pass <= k; ++pass) prefix_sum_in_place(a);
  return a;
}

CesaroEvaluation cesaro_sum(const SeriesSpec& s, int k, std::int64_t N, double tol) {
  if (N < 8) throw std::invalid_argument("cesaro_sum needs N >= 8 so that 8 tail samples exist");
  const auto means = cesaro_means(s, k, N);
  const auto tail = static_cast<std::size_t>(std::max<std::int64_t>(8, N / 10));
  std::vector<LimitSample> samples;
  samples.reserve(tail);
  for (std::size_t n = means.size() - tail; n < means.size(); ++n) {
    samples.push_back({static_cast<double>(n), static_cast<double>(means[n])});
  }
  return judge_tail(samples, tail, tol, k, static_cast<std::size_t>(N + 1));
}

std::optional<std::pair<int, CesaroEvaluation>> detect_order(const SeriesSpec& s, int k_max, std::int64_t N,
                                                             double tol) {
  for (int k = 0; k <= k_max; ++k) {
    auto eval = cesaro_sum(s, k, N, tol);
    if (eval.converged) return std::make_pair(k, std::move(eval));
    // overflow in A^k carries into every higher order
    if (!std::isfinite(eval.value)) break;
  }
  return std::nullopt;
}

double cesaro_oscillation(const SeriesSpec& s, int k, std::int64_t n_lo, std::int64_t n_hi) {
  if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("cesaro_oscillation needs 0 <= n_lo <= n_hi");
  const auto means = cesaro_means(s, k, std::max<std::int64_t>(n_hi, 1));
  auto first = means.begin() + n_lo;
  auto last = means.begin() + n_hi + 1;
  auto [lo, hi] = std::minmax_element(first, last);
  return static_cast<double>(*hi - *lo);
}

long double asymptotic_cesaro_mean(const SeriesSpec& s, int k, std::int64_t N) {
  const auto a = iterated_partial_sums(s, k, N);
  long double scale = 1.0L;
  for (int i = 1; i <= k; ++i) scale *= static_cast<long double>(i) / static_cast<long double>(N);
  return a.back() * scale;
}

}  // namespace gensum

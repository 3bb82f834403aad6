#pragma once

#include "gensum/periodic_polynomial.hpp"
#include "gensum/rational.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace gensum {

/// Memoized Bernoulli numbers B_0, B_1, ... with the B_1 = -1/2 convention.
///
/// Entries are produced by the recurrence
///   B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k,   n >= 1,
/// and the table only ever grows: an entry, once computed, is never
/// recomputed. Extension is serialized by an internal mutex, so a table may
/// be shared between threads. Practical range is a few thousand entries
/// (cost grows roughly cubically in n because numerators grow linearly in
/// digits).
class BernoulliTable {
 public:
  BernoulliTable();

  /// B_n, extending the table up to n if needed.
  Rational operator()(std::int64_t n);
  /// Number of entries computed so far.
  std::size_t size() const;
  /// Copy of B_0..B_{size-1}.
  std::vector<Rational> snapshot() const;

 private:
  void extend_to(std::size_t n);

  mutable std::mutex mutex_;
  std::vector<Rational> values_;
};

/// B_n from a process-wide table.
Rational bernoulli(std::int64_t n);

/// Sum of k^n for k = 1 .. m-1 via the Faulhaber-Bernoulli formula
///   (1/(n+1)) * sum_{k=0}^{n} C(n+1, k) B_k m^{n-k+1}.
/// Requires n >= 1 and m >= 1; throws std::invalid_argument otherwise.
Rational faulhaber_sum(std::int64_t n, std::int64_t m);

/// zeta(-n) for n >= 0: -1/2 at n = 0 and -B_{n+1}/(n+1) otherwise.
Rational zeta_neg_int(std::int64_t n);

/// The period-1 coefficient P_m({x}) in the decomposition
///   sum_{k<=[x]} k^n - x^{n+1}/(n+1) = sum_{m=0}^{n} P_m({x}) x^m,
/// expanded in powers of {x}. Requires n >= 1 and 0 <= m <= n; throws
/// std::out_of_range otherwise.
PeriodicPolynomial pm_polynomial(std::int64_t n, std::int64_t m);

}  // namespace gensum

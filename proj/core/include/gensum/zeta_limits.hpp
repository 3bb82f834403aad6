#pragma once

#include "gensum/cesaro_evaluation.hpp"
#include "gensum/compensated.hpp"
#include "gensum/periodic_polynomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace gensum {

/// 50 significant digits. The repeated primitives of the staircase cancel
/// about (alpha + 1) * log10(n) digits against their leading terms, so the
/// Cesaro path (k >= 1) runs in this type.
using WideReal = boost::multiprecision::cpp_bin_float_50;

/// The staircase f(x) = sum_{n<=[x]} w(n) - F.p. int_0^x w(t) dt, with
/// w(t) = t^alpha or, when log_weight is set, ln t * t^alpha.
///
/// Its Cesaro limit as x -> inf is zeta(-alpha) for the plain weight and
/// -zeta'(-alpha) for the log weight.
class StaircaseSpec {
 public:
  /// Throws std::invalid_argument when |alpha + 1| < 1e-6 (pole of the
  /// finite part).
  explicit StaircaseSpec(double alpha, bool log_weight = false);

  double alpha() const { return alpha_; }
  bool log_weight() const { return log_weight_; }

 private:
  double alpha_;
  bool log_weight_;
};

/// f(x) for x > 0 in double precision.
double staircase_value(const StaircaseSpec& s, double x);

/// Values F_0(n) .. F_k(n) of the staircase and its repeated primitives at
/// the integer boundary n, plus the running partial sum S_n.
///
/// F_0 = f and F_j(x) = int_0^x F_{j-1}; on (0, 1) where f = -F.p.(...)
/// the primitives are taken in the finite-part sense so that alpha < -1
/// is admissible (this only shifts F_j by a polynomial of degree < j).
template <class Real>
struct PrimitiveState {
  std::int64_t boundary = 1;
  std::vector<Real> values;
  CompensatedSum<Real> partial_sum;
  /// n^(alpha+1) and ln n at the boundary, filled in by advance_primitives.
  std::optional<Real> cached_power;
  Real cached_log{0};

  int order() const { return static_cast<int>(values.size()) - 1; }
};

/// State at n = 1, from the closed-form finite-part primitives on (0, 1).
template <class Real>
PrimitiveState<Real> initial_primitive_state(const StaircaseSpec& s, int k);

/// Moves the state from n to n + 1. On [n, n+1] the staircase is
/// S_n - P(t), P the finite-part antiderivative of the weight; each F_j is
/// carried by its Taylor polynomial at n plus the exact j-fold integral of
/// the piece, with P expanded in its convergent Taylor series about the
/// left end (interval split in sub-steps for n < 4).
template <class Real>
PrimitiveState<Real> advance_primitives(const PrimitiveState<Real>& state, const StaircaseSpec& s);

/// max(0, ceil(alpha) + 1)
int default_cesaro_order(double alpha);

/// Integer boundaries sampled by the estimators: 24 geometric points from
/// max(1, N/100) to N, deduplicated.
std::vector<std::int64_t> sample_boundaries(std::int64_t N);

/// Estimate of zeta(-alpha) as the (C,k) limit of the staircase:
/// k! F_k(n) / n^k sampled at integer boundaries up to X_max.
CesaroEvaluation zeta_via_cesaro(double alpha, std::optional<int> k, double X_max, double tol);

/// Estimate of zeta'(-alpha): the negated (C,k) limit of the log-weighted
/// staircase.
CesaroEvaluation zeta_prime_via_cesaro(double alpha, std::optional<int> k, double X_max, double tol);

/// (C,k) limit of x -> p({x}) sampled at integer boundaries. Equals the
/// periodic mean of p for k >= 1; mean-zero polynomials give 0.
CesaroEvaluation lemma_witness(const PeriodicPolynomial& p, int k, double X_max, double tol = 1e-6);

}  // namespace gensum

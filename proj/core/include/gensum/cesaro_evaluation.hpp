#pragma once

#include <cstddef>
#include <vector>

namespace gensum {

/// One sampled estimate of a generalized limit: the abscissa (term index n,
/// integration bound X or integer boundary) and the normalized value there.
struct LimitSample {
  double at = 0.0;
  double value = 0.0;
};

/// Outcome of a numeric Cesaro evaluation.
///
/// `error_estimate` is the spread (max - min) of the tail samples and
/// `converged` is true exactly when that spread is finite and within the
/// requested tolerance. Divergence is reported here, never thrown.
struct CesaroEvaluation {
  double value = 0.0;
  double order = 0.0;
  std::size_t n_terms = 0;
  std::vector<LimitSample> trace;
  double error_estimate = 0.0;
  bool converged = false;
  double tolerance = 0.0;
};

/// Builds an evaluation from the ordered samples, judging the last
/// `tail_count` of them. The trace keeps at most `trace_keep` tail samples
/// (never fewer than two when two are available).
CesaroEvaluation judge_tail(const std::vector<LimitSample>& samples, std::size_t tail_count, double tol,
                            double order, std::size_t n_terms, std::size_t trace_keep = 8);

}  // namespace gensum

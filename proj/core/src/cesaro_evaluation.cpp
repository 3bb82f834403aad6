#include "gensum/cesaro_evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gensum {

CesaroEvaluation judge_tail(const std::vector<LimitSample>& samples, std::size_t tail_count, double tol,
                            double order, std::size_t n_terms, std::size_t trace_keep) {
  CesaroEvaluation eval;
  eval.order = order;
  eval.n_terms = n_terms;
  eval.tolerance = tol;
  if (samples.empty()) {
    eval.value = std::numeric_limits<double>::quiet_NaN();
    eval.error_estimate = std::numeric_limits<double>::infinity();
    return eval;
  }
  tail_count = std::clamp<std::size_t>(tail_count, 1, samples.size());
  const auto first = samples.end() - static_cast<std::ptrdiff_t>(tail_count);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool finite = true;
  for (auto it = first; it != samples.end(); ++it) {
    if (!std::isfinite(it->value)) {
      finite = false;
      break;
    }
    lo = std::min(lo, it->value);
    hi = std::max(hi, it->value);
  }
  eval.value = samples.back().value;
  eval.error_estimate = finite ? hi - lo : std::numeric_limits<double>::infinity();
  eval.converged = finite && eval.error_estimate <= tol;

  const std::size_t keep = std::min(samples.size(), std::max<std::size_t>(trace_keep, 2));
  eval.trace.assign(samples.end() - static_cast<std::ptrdiff_t>(keep), samples.end());
  return eval;
}

}  // namespace gensum

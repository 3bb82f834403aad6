#pragma once

#include <cmath>

namespace gensum {

/// Neumaier (improved Kahan-Babuska) running sum.
template <class Real>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(Real initial) : sum_(initial) {}

  CompensatedSum& operator+=(const Real& x) {
    using std::abs;
    Real t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  /// Once the running sum overflows the carry is NaN; report the raw sum.
  Real value() const {
    using std::isfinite;
    return isfinite(sum_) ? sum_ + carry_ : sum_;
  }

 private:
  Real sum_{0};
  Real carry_{0};
};

}  // namespace gensum

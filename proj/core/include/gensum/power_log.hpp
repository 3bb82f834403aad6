#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace gensum {

/// coeff * t^exponent * (ln t)^log_power
template <class Real>
struct PowerLogTerm {
  Real coeff{0};
  Real exponent{0};
  int log_power = 0;
};

/// Finite linear combination of t^g (ln t)^p terms on t > 0, closed under
/// finite-part integration from 0. This is the family t^a (ln t)^p used by
/// the integrands and the staircase pieces.
template <class Real>
class PowerLogSeries {
 public:
  PowerLogSeries() = default;
  explicit PowerLogSeries(std::vector<PowerLogTerm<Real>> terms) : terms_(std::move(terms)) {}

  static PowerLogSeries monomial(Real coeff, Real exponent, int log_power = 0) {
    return PowerLogSeries({PowerLogTerm<Real>{coeff, exponent, log_power}});
  }

  const std::vector<PowerLogTerm<Real>>& terms() const { return terms_; }

  Real operator()(const Real& t) const {
    using std::log;
    using std::pow;
    const Real lt = log(t);
    Real acc{0};
    for (const auto& term : terms_) {
      Real v = term.coeff * pow(t, term.exponent);
      for (int i = 0; i < term.log_power; ++i) v *= lt;
      acc += v;
    }
    return acc;
  }

  /// Finite-part primitive from 0:
  ///   int_0^x t^g (ln t)^p dt = x^{g+1} sum_l (-1)^l p!/(p-l)! (ln x)^{p-l} / (g+1)^{l+1},  g != -1
  ///   int_0^x t^-1 (ln t)^p dt = (ln x)^{p+1} / (p+1).
  /// For g > -1 this is the ordinary integral; otherwise the divergent
  /// eps-terms of int_eps^x are dropped.
  PowerLogSeries primitive() const {
    std::vector<PowerLogTerm<Real>> out;
    for (const auto& term : terms_) {
      const Real g1 = term.exponent + Real(1);
      if (g1 == Real(0)) {
        out.push_back({term.coeff / Real(term.log_power + 1), Real(0), term.log_power + 1});
        continue;
      }
      Real factor = term.coeff / g1;  // l = 0
      for (int l = 0; l <= term.log_power; ++l) {
        out.push_back({factor, g1, term.log_power - l});
        factor *= -Real(term.log_power - l) / g1;
      }
    }
    return PowerLogSeries(merge(std::move(out)));
  }

  PowerLogSeries primitive(int times) const {
    PowerLogSeries p = *this;
    for (int i = 0; i < times; ++i) p = p.primitive();
    return p;
  }

  PowerLogSeries derivative() const {
    std::vector<PowerLogTerm<Real>> out;
    for (const auto& term : terms_) {
      if (term.exponent != Real(0)) {
        out.push_back({term.coeff * term.exponent, term.exponent - Real(1), term.log_power});
      }
      if (term.log_power > 0) {
        out.push_back({term.coeff * Real(term.log_power), term.exponent - Real(1), term.log_power - 1});
      }
    }
    return PowerLogSeries(merge(std::move(out)));
  }

  /// Multiplies by t^shift.
  PowerLogSeries shifted(const Real& shift) const {
    auto out = terms_;
    for (auto& t : out) t.exponent += shift;
    return PowerLogSeries(std::move(out));
  }

  PowerLogSeries scaled(const Real& s) const {
    auto out = terms_;
    for (auto& t : out) t.coeff *= s;
    return PowerLogSeries(std::move(out));
  }

  friend PowerLogSeries operator+(const PowerLogSeries& a, const PowerLogSeries& b) {
    auto out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return PowerLogSeries(merge(std::move(out)));
  }

 private:
  static std::vector<PowerLogTerm<Real>> merge(std::vector<PowerLogTerm<Real>> in) {
    std::vector<PowerLogTerm<Real>> out;
    for (auto& t : in) {
      bool merged = false;
      for (auto& o : out) {
        if (o.exponent == t.exponent && o.log_power == t.log_power) {
          o.coeff += t.coeff;
          merged = true;
          break;
        }
      }
      if (!merged) out.push_back(t);
    }
    std::erase_if(out, [](const auto& t) { return t.coeff == Real(0); });
    return out;
  }

  std::vector<PowerLogTerm<Real>> terms_;
};

}  // namespace gensum

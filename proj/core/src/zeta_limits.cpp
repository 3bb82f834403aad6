#include "gensum/zeta_limits.hpp"

#include "gensum/power_log.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gensum {

namespace {

constexpr int kMaxTaylorTerms = 600;

template <class Real>
Real to_real(double x) {
  return Real(x);
}

// The finite-part antiderivative of the weight, P(t):
//   t^b / b                       (plain weight)
//   t^b (ln t / b - 1 / b^2)      (log weight)
// with b = alpha + 1.
template <class Real>
struct Piece {
  Real alpha;
  Real beta;
  bool log_weight;

  Real at(const Real& t) const {
    using std::log;
    using std::pow;
    const Real tb = pow(t, beta);
    if (!log_weight) return tb / beta;
    return tb * (log(t) / beta - Real(1) / (beta * beta));
  }

  // Same quantities from a cached t^beta and ln t.
  Real at_from(const Real& tb, const Real& lt) const {
    if (!log_weight) return tb / beta;
    return tb * (lt / beta - Real(1) / (beta * beta));
  }
  Real weight_from(const Real& t, const Real& tb, const Real& lt) const {
    return log_weight ? Real(lt * tb / t) : Real(tb / t);
  }

  // w(n) = n^alpha or ln n * n^alpha
  Real weight(const Real& t) const {
    using std::log;
    using std::pow;
    const Real ta = pow(t, alpha);
    return log_weight ? Real(log(t) * ta) : ta;
  }

  // Taylor coefficients E_i = P^{(i)}(a) h^i / i!, truncated once the terms
  // fall below working precision.
  std::vector<Real> taylor(const Real& a, const Real& h) const {
    using std::log;
    using std::pow;
    return taylor_from(a, pow(a, beta), log_weight ? Real(log(a)) : Real(0), h);
  }

  std::vector<Real> taylor_from(const Real& a, const Real& ab, const Real& la, const Real& h) const {
    using std::abs;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real r = h / a;
    std::vector<Real> e;
    Real binom(1);
    Real dbinom(0);
    Real rp(1);
    Real largest(0);
    int quiet = 0;
    for (int i = 0; i < kMaxTaylorTerms; ++i) {
      Real term = log_weight ? Real((binom * la + dbinom) / beta - binom / (beta * beta)) : Real(binom / beta);
      term *= ab * rp;
      e.push_back(term);
      const Real mag = abs(term);
      if (mag > largest) largest = mag;
      quiet = (mag <= eps * largest) ? quiet + 1 : 0;
      if (quiet >= 2) break;
      const Real next_binom = binom * (beta - i) / (i + 1);
      dbinom = (dbinom * (beta - i) + binom) / (i + 1);
      binom = next_binom;
      rp *= r;
    }
    return e;
  }
};

template <class Real>
Piece<Real> make_piece(const StaircaseSpec& s) {
  const Real alpha = to_real<Real>(s.alpha());
  return Piece<Real>{alpha, alpha + Real(1), s.log_weight()};
}

template <class Real>
PowerLogSeries<Real> piece_series(const Piece<Real>& p) {
  if (!p.log_weight) return PowerLogSeries<Real>::monomial(Real(1) / p.beta, p.beta, 0);
  return PowerLogSeries<Real>::monomial(Real(1) / p.beta, p.beta, 1) +
         PowerLogSeries<Real>::monomial(-Real(1) / (p.beta * p.beta), p.beta, 0);
}

// Value at t = 1 of a power-log series: every log factor vanishes there.
template <class Real>
Real value_at_one(const PowerLogSeries<Real>& series) {
  Real acc(0);
  for (const auto& t : series.terms()) {
    if (t.log_power == 0) acc += t.coeff;
  }
  return acc;
}

template <class Real>
Real factorial(int n) {
  Real f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

StaircaseSpec::StaircaseSpec(double alpha, bool log_weight) : alpha_(alpha), log_weight_(log_weight) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  if (std::abs(alpha + 1.0) < 1e-6) {
    throw std::invalid_argument("alpha within 1e-6 of -1: the finite part has a pole there");
  }
}

double staircase_value(const StaircaseSpec& s, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("staircase_value needs x > 0");
  // long double: the sum and the primitive nearly cancel for large alpha
  const auto piece = make_piece<long double>(s);
  CompensatedSum<long double> sum;
  const auto top = static_cast<std::int64_t>(std::floor(x));
  for (std::int64_t n = 1; n <= top; ++n) sum += piece.weight(static_cast<long double>(n));
  return static_cast<double>(sum.value() - piece.at(static_cast<long double>(x)));
}

template <class Real>
PrimitiveState<Real> initial_primitive_state(const StaircaseSpec& s, int k) {
  if (k < 0) throw std::invalid_argument("Cesaro order k must be non-negative");
  const auto piece = make_piece<Real>(s);
  PrimitiveState<Real> state;
  state.boundary = 1;
  state.values.resize(static_cast<std::size_t>(k + 1));
  state.partial_sum += piece.weight(Real(1));
  state.values[0] = state.partial_sum.value() - piece.at(Real(1));
  // On (0,1) f = -P; F_j(1) = -(j-fold finite-part primitive of P)(1).
  auto series = piece_series(piece);
  for (int j = 1; j <= k; ++j) {
    series = series.primitive();
    state.values[static_cast<std::size_t>(j)] = -value_at_one(series);
  }
  return state;
}

template <class Real>
PrimitiveState<Real> advance_primitives(const PrimitiveState<Real>& state, const StaircaseSpec& s) {
  const auto piece = make_piece<Real>(s);
  const int k = state.order();
  const std::int64_t n = state.boundary;
  PrimitiveState<Real> next = state;
  const Real S = state.partial_sum.value();

  if (k >= 1) {
    const int substeps = n < 4 ? static_cast<int>((4 + n - 1) / n) : 1;
    const Real h = Real(1) / substeps;
    std::vector<Real> inv_fact(static_cast<std::size_t>(k + 1));
    inv_fact[0] = 1;
    for (int i = 1; i <= k; ++i) inv_fact[static_cast<std::size_t>(i)] = inv_fact[static_cast<std::size_t>(i - 1)] / i;

    std::vector<Real> F = state.values;
    for (int sub = 0; sub < substeps; ++sub) {
      const Real a = Real(n) + h * sub;
      const auto E = (sub == 0 && state.cached_power)
                         ? piece.taylor_from(a, *state.cached_power, state.cached_log, h)
                         : piece.taylor(a, h);
      std::vector<Real> hp(static_cast<std::size_t>(k + 1));
      hp[0] = 1;
      for (int i = 1; i <= k; ++i) hp[static_cast<std::size_t>(i)] = hp[static_cast<std::size_t>(i - 1)] * h;

      std::vector<Real> G = F;
      for (int j = 1; j <= k; ++j) {
        Real carry(0);
        for (int i = 0; i < j; ++i) {
          carry += F[static_cast<std::size_t>(j - i)] * hp[static_cast<std::size_t>(i)] * inv_fact[static_cast<std::size_t>(i)];
        }
        // j-fold integral of P over [a, a+h]: h^j sum_i E_i i!/(i+j)!
        Real integral(0);
        for (std::size_t i = 0; i < E.size(); ++i) {
          // (i+1)(i+2)...(i+j); exact in 64 bits while j <= 6 and i < 600
          if (j <= 6) {
            unsigned long long w = 1;
            for (int l = 1; l <= j; ++l) w *= static_cast<unsigned long long>(i) + static_cast<unsigned long long>(l);
            integral += E[i] / w;
          } else {
            Real w(1);
            for (int l = 1; l <= j; ++l) w *= static_cast<unsigned long long>(i) + static_cast<unsigned long long>(l);
            integral += E[i] / w;
          }
        }
        integral *= hp[static_cast<std::size_t>(j)];
        G[static_cast<std::size_t>(j)] =
            carry + S * hp[static_cast<std::size_t>(j)] * inv_fact[static_cast<std::size_t>(j)] - integral;
      }
      F = std::move(G);
    }
    next.values = std::move(F);
  }

  using std::log;
  using std::pow;
  const Real end = Real(n + 1);
  const Real end_power = pow(end, piece.beta);
  const Real end_log = piece.log_weight ? Real(log(end)) : Real(0);
  next.boundary = n + 1;
  next.partial_sum += piece.weight_from(end, end_power, end_log);
  next.values[0] = next.partial_sum.value() - piece.at_from(end_power, end_log);
  next.cached_power = end_power;
  next.cached_log = end_log;
  return next;
}

template PrimitiveState<double> initial_primitive_state<double>(const StaircaseSpec&, int);
template PrimitiveState<WideReal> initial_primitive_state<WideReal>(const StaircaseSpec&, int);
template PrimitiveState<double> advance_primitives<double>(const PrimitiveState<double>&, const StaircaseSpec&);
template PrimitiveState<WideReal> advance_primitives<WideReal>(const PrimitiveState<WideReal>&,
                                                              const StaircaseSpec&);

int default_cesaro_order(double alpha) {
  return std::max(0, static_cast<int>(std::ceil(alpha)) + 1);
}

std::vector<std::int64_t> sample_boundaries(std::int64_t N) {
  if (N < 2) throw std::invalid_argument("sample_boundaries needs N >= 2");
  const double lo = std::max(1.0, static_cast<double>(N) / 100.0);
  const double hi = static_cast<double>(N);
  constexpr int count = 24;
  std::vector<std::int64_t> out;
  for (int i = 0; i < count; ++i) {
    const double x = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    auto n = std::clamp<std::int64_t>(std::llround(x), 1, N);
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  if (out.back() != N) out.push_back(N);
  return out;
}

namespace {

template <class Real>
std::vector<LimitSample> staircase_samples(const StaircaseSpec& s, int k, std::int64_t N) {
  const auto boundaries = sample_boundaries(N);
  const Real kf = factorial<Real>(k);
  std::vector<LimitSample> samples;
  samples.reserve(boundaries.size());
  auto state = initial_primitive_state<Real>(s, k);
  std::size_t next = 0;
  while (next < boundaries.size()) {
    if (state.boundary == boundaries[next]) {
      using std::pow;
      const Real nk = pow(Real(state.boundary), k);
      samples.push_back({static_cast<double>(state.boundary),
                         static_cast<double>(Real(kf * state.values[static_cast<std::size_t>(k)] / nk))});
      ++next;
      continue;
    }
    state = advance_primitives(state, s);
  }
  return samples;
}

// k = 0 needs no primitives and no extra precision: the partial sum is
// accumulated with compensation and f(n) = S_n - P(n) read off directly.
std::vector<LimitSample> staircase_samples_plain(const StaircaseSpec& s, std::int64_t N) {
  const auto boundaries = sample_boundaries(N);
  const auto piece = make_piece<double>(s);
  std::vector<LimitSample> samples;
  CompensatedSum<double> sum;
  std::size_t next = 0;
  const double alpha = s.alpha();
  const bool log_weight = s.log_weight();
  for (std::int64_t n = 1; n <= N && next < boundaries.size(); ++n) {
    const double x = static_cast<double>(n);
    const double lx = std::log(x);
    const double xa = std::exp(alpha * lx);
    sum += log_weight ? lx * xa : xa;
    if (n == boundaries[next]) {
      samples.push_back({x, sum.value() - piece.at(x)});
      ++next;
    }
  }
  return samples;
}

CesaroEvaluation staircase_limit(const StaircaseSpec& s, std::optional<int> k_opt, double X_max, double tol,
                                 bool negate) {
  const int k = k_opt.value_or(default_cesaro_order(s.alpha()));
  if (k < 0) throw std::invalid_argument("Cesaro order k must be non-negative");
  if (!(X_max >= 2.0)) throw std::invalid_argument("X_max must be at least 2");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto N = static_cast<std::int64_t>(std::floor(X_max));
  auto samples = k == 0 ? staircase_samples_plain(s, N) : staircase_samples<WideReal>(s, k, N);
  if (negate) {
    for (auto& x : samples) x.value = -x.value;
  }
  const std::size_t tail = std::max<std::size_t>(3, samples.size() / 4);
  return judge_tail(samples, tail, tol, k, static_cast<std::size_t>(N));
}

}  // namespace

CesaroEvaluation zeta_via_cesaro(double alpha, std::optional<int> k, double X_max, double tol) {
  return staircase_limit(StaircaseSpec(alpha, false), k, X_max, tol, false);
}

CesaroEvaluation zeta_prime_via_cesaro(double alpha, std::optional<int> k, double X_max, double tol) {
  return staircase_limit(StaircaseSpec(alpha, true), k, X_max, tol, true);
}

CesaroEvaluation lemma_witness(const PeriodicPolynomial& p, int k, double X_max, double tol) {
  if (k < 0) throw std::invalid_argument("Cesaro order k must be non-negative");
  if (!(X_max >= 2.0)) throw std::invalid_argument("X_max must be at least 2");
  const auto N = static_cast<std::int64_t>(std::floor(X_max));

  // Over each unit period the j-fold integral of p is the constant
  //   c_j = sum_i coeff_i * i! / (i + j)!.
  std::vector<long double> c(static_cast<std::size_t>(k + 1));
  for (int j = 1; j <= k; ++j) {
    Rational acc;
    const auto& coeffs = p.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      BigInt denom = 1;
      for (int l = 1; l <= j; ++l) denom *= static_cast<long>(i) + l;
      acc += coeffs[i] / Rational(denom);
    }
    c[static_cast<std::size_t>(j)] = acc.to_long_double();
  }
  std::vector<long double> inv_fact(static_cast<std::size_t>(k + 1), 1.0L);
  for (int i = 1; i <= k; ++i) inv_fact[static_cast<std::size_t>(i)] = inv_fact[static_cast<std::size_t>(i - 1)] / i;
  const long double kf = factorial<long double>(k);
  const double at_integer = p.in_fraction(0.0);

  const auto boundaries = sample_boundaries(N);
  std::vector<long double> F(static_cast<std::size_t>(k + 1), 0.0L);
  std::vector<LimitSample> samples;
  std::size_t next = 0;
  for (std::int64_t n = 0; n <= N && next < boundaries.size(); ++n) {
    if (n == boundaries[next]) {
      const double v = k == 0 ? at_integer
                              : static_cast<double>(kf * F[static_cast<std::size_t>(k)] /
                                                    std::pow(static_cast<long double>(n), k));
      samples.push_back({static_cast<double>(n), v});
      ++next;
    }
    std::vector<long double> G = F;
    for (int j = 1; j <= k; ++j) {
      long double carry = 0.0L;
      for (int i = 0; i < j; ++i) carry += F[static_cast<std::size_t>(j - i)] * inv_fact[static_cast<std::size_t>(i)];
      G[static_cast<std::size_t>(j)] = carry + c[static_cast<std::size_t>(j)];
    }
    F = std::move(G);
  }
  const std::size_t tail = std::max<std::size_t>(3, samples.size() / 4);
  return judge_tail(samples, tail, tol, k, static_cast<std::size_t>(N));
}

}  // namespace gensum

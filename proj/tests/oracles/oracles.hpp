#pragma once

// Independent reference computations used only by tests. None of these
// call into gensum's algorithms.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

/// Bernoulli numbers by the Akiyama-Tanigawa transform (B_1 = +1/2 there;
/// flipped to -1/2 on return).
inline std::vector<cpp_rational> akiyama_tanigawa(int n_max) {
  std::vector<cpp_rational> out;
  std::vector<cpp_rational> a(static_cast<std::size_t>(n_max + 1));
  for (int m = 0; m <= n_max; ++m) {
    a[static_cast<std::size_t>(m)] = cpp_rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      a[static_cast<std::size_t>(j - 1)] = j * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
    }
    out.push_back(a[0]);
  }
  if (n_max >= 1) out[1] = -out[1];
  return out;
}

/// sum_{k=1}^{m-1} k^n by direct summation.
inline cpp_int power_sum(int n, int m) {
  cpp_int acc = 0;
  for (int k = 1; k < m; ++k) acc += boost::multiprecision::pow(cpp_int(k), static_cast<unsigned>(n));
  return acc;
}

/// zeta(s), real s != 1, by Euler-Maclaurin with N = 20 and hard-coded
/// Bernoulli numbers B_2..B_20.
inline double euler_maclaurin_zeta(double s) {
  constexpr int N = 20;
  static const double b2k[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
                               -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};
  long double acc = 0.0L;
  for (int j = 1; j < N; ++j) acc += std::pow(static_cast<long double>(j), -static_cast<long double>(s));
  const long double n = N;
  acc += std::pow(n, 1.0L - s) / (s - 1.0L) + 0.5L * std::pow(n, -static_cast<long double>(s));
  long double rising = s;  // s (s+1) ... (s+2k-2)
  long double fact = 2.0L;  // (2k)!
  for (int k = 1; k <= 10; ++k) {
    acc += b2k[k - 1] / fact * rising * std::pow(n, -s - 2.0L * k + 1.0L);
    rising *= (s + 2.0L * k - 1.0L) * (s + 2.0L * k);
    fact *= (2.0L * k + 1.0L) * (2.0L * k + 2.0L);
  }
  return static_cast<double>(acc);
}

/// zeta'(s) for s > 1: -sum_{n<N} ln n / n^s minus the tail, the tail
/// taken as int_N^inf ln t t^{-s} dt + ln N / (2 N^s) (Euler-Maclaurin to
/// first order; remainder O(ln N / N^{s+1})).
inline double direct_zeta_prime(double s, long N = 200000) {
  long double acc = 0.0L;
  for (long j = 2; j < N; ++j) {
    const long double x = j;
    acc += std::log(x) * std::pow(x, -static_cast<long double>(s));
  }
  const long double n = N;
  const long double ln = std::log(n);
  const long double tail = std::pow(n, 1.0L - s) * (ln / (s - 1.0L) + 1.0L / ((s - 1.0L) * (s - 1.0L))) +
                           0.5L * ln * std::pow(n, -static_cast<long double>(s));
  return static_cast<double>(-(acc + tail));
}

/// Adaptive quadrature over [a, b], for cross-checks.
template <class F>
double quad(F&& f, double a, double b) {
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 10, 1e-15, &err);
}

/// Double-exponential quadrature, for integrands with endpoint singularities.
template <class F>
double quad_endpoint(F&& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-15);
}

}  // namespace oracle

#pragma once

#include "gensum/cesaro_evaluation.hpp"
#include "gensum/power_log.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gensum {

using RealFunction = std::function<double(double)>;

/// Adaptive quadrature failed to reach its target on some window.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error_(achieved) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

/// An integrand on [0, inf), either from a closed-form family (whose
/// repeated primitives from 0 and weighted moments are exact) or a sampled
/// callable integrated by adaptive quadrature.
///
/// Primitive indices follow F_0 = f, F_j(x) = int_0^x F_{j-1}(t) dt.
class Integrand {
 public:
  enum class Kind { closed_form, sampled };

  static Integrand sine(double a);
  static Integrand cosine(double a);
  /// e^{-t}
  static Integrand exp_decay();
  /// t^alpha (ln t)^p; alpha <= -1 is not locally integrable at 0 and is
  /// rejected with std::invalid_argument (use finite_part for those).
  static Integrand power_log(double alpha, int p = 0);
  static Integrand constant(double c);
  /// User-supplied chain: chain[0] = f, chain[j] = j-th primitive from 0.
  /// Each link is checked against a central difference of the next at 32
  /// pseudo-random points; a mismatch throws std::invalid_argument.
  static Integrand from_primitives(std::vector<RealFunction> chain, std::string name = "chain");
  /// Arbitrary callable. Quadrature windows are aligned to multiples of
  /// `panel`, which should divide the spacing of any discontinuities.
  static Integrand sampled(RealFunction f, double panel = 1.0, std::string name = "sampled");

  Kind kind() const;
  const std::string& name() const;
  double operator()(double t) const;

  /// Highest primitive order available in closed form (-1 for sampled;
  /// effectively unbounded for the built-in families).
  int closed_primitive_depth() const;
  /// Closed-form F_j(x); throws std::logic_error when unavailable.
  double primitive(int j, double x) const;
  /// int_0^X t^i f(t) dt in closed form, when the family provides it.
  std::optional<double> moment(int i, double X) const;
  double panel() const;

 private:
  struct Impl;
  explicit Integrand(std::shared_ptr<const Impl> impl);
  void verify_chain(int depth) const;
  std::shared_ptr<const Impl> impl_;
};

/// Geometric grid of `count` points from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);
/// 16 points from 1e2 to 1e5.
std::vector<double> default_integral_grid();

/// int_0^X (1 - t/X)^k f(t) dt for real k > -1, X > 0. Closed-form
/// integrands with integer k use the binomial expansion over exact moments;
/// everything else uses adaptive quadrature (absolute target 1e-12 per
/// window), throwing QuadratureError when that target is missed badly.
double riesz_mean(const Integrand& f, double k, double X);

/// Repeated primitives F_1..F_k at each grid point (grid increasing). Uses
/// closed forms when available, otherwise panel-wise quadrature with an
/// exact Taylor carry between panels. Result[g][j-1] = F_j(grid[g]).
std::vector<std::vector<double>> primitives_on_grid(const Integrand& f, int k, const std::vector<double>& grid);

/// (C,k) mean of int_0^inf f: riesz_mean along the grid, verdict from the
/// spread over the last quarter of the grid (at least 3 points).
/// Grid must have >= 8 increasing points spanning >= 2 decades.
CesaroEvaluation cesaro_integral(const Integrand& f, double k, const std::vector<double>& grid, double tol);

/// Cesaro limit of the function f itself: k! F_k(X) / X^k along the grid,
/// with F_0 = f. Integer k >= 0.
CesaroEvaluation primitive_limit(const Integrand& f, int k, const std::vector<double>& grid, double tol);

/// The primitive form of the (C,k) integral mean: k! F_{k+1}(X) / X^k,
/// i.e. the Cesaro limit of x -> int_0^x f. Integer k >= 0.
CesaroEvaluation integral_primitive_limit(const Integrand& f, int k, const std::vector<double>& grid, double tol);

}  // namespace gensum

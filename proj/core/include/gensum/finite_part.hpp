#pragma once

#include "gensum/rational.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gensum {

/// Divergent basis function eps^{-a} (ln 1/eps)^b of the standard
/// Hadamard family (a > 0, b >= 0, or a = 0, b >= 1).
struct DivergentTerm {
  double a = 0.0;
  int b = 0;
  double coeff = 0.0;
};

struct BasisExponent {
  double a = 0.0;
  int b = 0;
};

/// g(eps) = sum divergent_terms + finite_part + o(1) as eps -> 0+.
struct FinitePartDecomposition {
  std::vector<DivergentTerm> divergent_terms;
  double finite_part = 0.0;
  /// RMS residual of the fit over the grid (unweighted).
  double residual = 0.0;
  /// Ratio of extreme singular values of the normalized design matrix.
  double condition = 0.0;
};

/// The least-squares design was too ill-conditioned to separate the basis
/// from the constant; pick a different basis or grid.
class IllConditionedFit : public std::runtime_error {
 public:
  IllConditionedFit(const std::string& what, double condition)
      : std::runtime_error(what), condition_(condition) {}
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// F.p. int_0^b t^alpha dt: b^{alpha+1}/(alpha+1), or ln b at alpha = -1.
double fp_power_integral(double alpha, double b);
/// Exact variant; available when the result is rational, i.e. alpha != -1
/// with b = 1 or alpha an integer, or alpha = -1 with b = 1.
std::optional<Rational> fp_power_integral_exact(const Rational& alpha, const Rational& b);

/// F.p. int_0^b t^alpha ln t dt:
///   b^{alpha+1} (ln b/(alpha+1) - 1/(alpha+1)^2),  alpha != -1
///   (ln b)^2 / 2,                                 alpha = -1
double fp_log_power_integral(double alpha, double b);
/// Exact variant; rational only at b = 1 (-1/(alpha+1)^2, or 0 at alpha = -1).
std::optional<Rational> fp_log_power_integral_exact(const Rational& alpha, const Rational& b);

/// Fits g(eps) ~ sum_i c_i eps^{-a_i} (ln 1/eps)^{b_i} + A on the grid by
/// weighted least squares (rows scaled by 1/max(1,|g|), columns normalized
/// to unit norm) and returns the coefficients and A.
///
/// Preconditions (std::invalid_argument): basis pairs distinct, none equal
/// to (0, 0), a >= 0, b >= 0; eps grid strictly decreasing in (0, 1),
/// spanning >= 3 decades with at least 2 * (basis size + 1) points.
/// Throws IllConditionedFit when the condition estimate exceeds
/// `max_condition`.
FinitePartDecomposition extract_finite_part(const std::function<double(double)>& g,
                                            const std::vector<BasisExponent>& basis,
                                            const std::vector<double>& eps_grid, double max_condition = 1e10);

}  // namespace gensum

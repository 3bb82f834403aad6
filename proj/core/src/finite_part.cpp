#include "gensum/finite_part.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace gensum {

double fp_power_integral(double alpha, double b) {
  if (!(b > 0.0)) throw std::invalid_argument("finite-part upper bound must be positive");
  if (alpha == -1.0) return std::log(b);
  return std::pow(b, alpha + 1.0) / (alpha + 1.0);
}

std::optional<Rational> fp_power_integral_exact(const Rational& alpha, const Rational& b) {
  if (b.sign() <= 0) throw std::invalid_argument("finite-part upper bound must be positive");
  const Rational g1 = alpha + Rational(1);
  const bool unit = b == Rational(1);
  if (g1.is_zero()) return unit ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (unit) return Rational(1) / g1;
  if (!g1.is_integer()) return std::nullopt;
  return b.pow(static_cast<std::int64_t>(g1.numerator())) / g1;
}

double fp_log_power_integral(double alpha, double b) {
  if (!(b > 0.0)) throw std::invalid_argument("finite-part upper bound must be positive");
  const double lb = std::log(b);
  if (alpha == -1.0) return 0.5 * lb * lb;
  const double g1 = alpha + 1.0;
  return std::pow(b, g1) * (lb / g1 - 1.0 / (g1 * g1));
}

std::optional<Rational> fp_log_power_integral_exact(const Rational& alpha, const Rational& b) {
  if (b.sign() <= 0) throw std::invalid_argument("finite-part upper bound must be positive");
  if (b != Rational(1)) return std::nullopt;
  const Rational g1 = alpha + Rational(1);
  if (g1.is_zero()) return Rational(0);
  return -(Rational(1) / (g1 * g1));
}

FinitePartDecomposition extract_finite_part(const std::function<double(double)>& g,
                                            const std::vector<BasisExponent>& basis,
                                            const std::vector<double>& eps_grid, double max_condition) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis[i];
    if (e.a < 0.0 || e.b < 0) throw std::invalid_argument("basis exponents must satisfy a >= 0, b >= 0");
    if (e.a == 0.0 && e.b == 0) throw std::invalid_argument("basis pair (0,0) is the finite part itself");
    for (std::size_t j = 0; j < i; ++j) {
      if (basis[j].a == e.a && basis[j].b == e.b) throw std::invalid_argument("basis pairs must be distinct");
    }
  }
  const std::size_t cols = basis.size() + 1;
  if (eps_grid.size() < 2 * cols) throw std::invalid_argument("eps grid needs at least 2*(basis size + 1) points");
  for (std::size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 0.0 && eps_grid[i] < 1.0)) throw std::invalid_argument("eps grid must lie in (0, 1)");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1])) throw std::invalid_argument("eps grid must be decreasing");
  }
  if (eps_grid.front() < 1e3 * eps_grid.back()) throw std::invalid_argument("eps grid must span 3 decades");

  const auto rows = static_cast<Eigen::Index>(eps_grid.size());
  Eigen::MatrixXd basis_values(rows, static_cast<Eigen::Index>(cols));
  Eigen::VectorXd values(rows);
  Eigen::VectorXd weights(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const double eps = eps_grid[static_cast<std::size_t>(r)];
    const double gv = g(eps);
    if (!std::isfinite(gv)) throw std::invalid_argument("g is not finite on the eps grid");
    const double log_inv = -std::log(eps);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      basis_values(r, static_cast<Eigen::Index>(c)) = std::pow(eps, -basis[c].a) * std::pow(log_inv, basis[c].b);
    }
    basis_values(r, static_cast<Eigen::Index>(basis.size())) = 1.0;
    values(r) = gv;
    weights(r) = 1.0 / std::max(1.0, std::abs(gv));
  }
  Eigen::MatrixXd design = weights.asDiagonal() * basis_values;
  const Eigen::VectorXd rhs = weights.cwiseProduct(values);

  Eigen::VectorXd norms = design.colwise().norm().transpose();
  for (Eigen::Index c = 0; c < design.cols(); ++c) {
    if (norms(c) == 0.0) throw IllConditionedFit("basis column vanishes on the grid", std::numeric_limits<double>::infinity());
    design.col(c) /= norms(c);
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  if (!(cond <= max_condition)) {
    throw IllConditionedFit("finite-part fit is ill-conditioned (condition " + std::to_string(cond) + ")", cond);
  }
  Eigen::VectorXd scaled = svd.solve(rhs);
  Eigen::VectorXd coeff = scaled.cwiseQuotient(norms);

  FinitePartDecomposition out;
  out.condition = cond;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    out.divergent_terms.push_back({basis[c].a, basis[c].b, coeff(static_cast<Eigen::Index>(c))});
  }
  out.finite_part = coeff(static_cast<Eigen::Index>(basis.size()));
  const Eigen::VectorXd resid = basis_values * coeff - values;
  out.residual = std::sqrt(resid.squaredNorm() / static_cast<double>(rows));
  return out;
}

}  // namespace gensum

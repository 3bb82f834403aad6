#include "gensum/cesaro_integral.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <variant>

namespace gensum {

namespace {

using cplx = std::complex<double>;

// c * Part(e^{lambda t}); Part selects the real or imaginary component.
struct Exponential {
  cplx lambda;
  bool imaginary_part = false;
  double scale = 1.0;
};

struct PowerLog {
  PowerLogSeries<double> series;
};

struct Chain {
  std::vector<RealFunction> links;
};

struct Sampled {
  RealFunction f;
};

double select(const Exponential& e, cplx z) { return e.scale * (e.imaginary_part ? z.imag() : z.real()); }

// j-fold primitive from 0 of e^{lambda t}:
//   (e^{lambda x} - sum_{m<j} (lambda x)^m / m!) / lambda^j.
// For small |lambda x| the subtraction cancels, so sum the tail directly:
//   x^j sum_{m>=0} (lambda x)^m / (m+j)!.
cplx exp_primitive(cplx lambda, int j, double x) {
  const cplx z = lambda * x;
  if (std::abs(z) < 1.0) {
    cplx term = 1.0;
    for (int i = 1; i <= j; ++i) term /= static_cast<double>(i);
    cplx sum = 0.0;
    for (int m = 0; m < 60; ++m) {
      sum += term;
      term *= z / static_cast<double>(m + j + 1);
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(x, j) * sum;
  }
  cplx taylor = 0.0;
  cplx term = 1.0;
  for (int m = 0; m < j; ++m) {
    taylor += term;
    term *= z / static_cast<double>(m + 1);
  }
  return (std::exp(z) - taylor) / std::pow(lambda, j);
}

// int_0^X t^i e^{lambda t} dt = i! (-1)^i / lambda^{i+1} [e^{lambda X} sum_{m<=i} (-lambda X)^m/m! - 1]
cplx exp_moment(cplx lambda, int i, double X) {
  const cplx z = -lambda * X;
  cplx sum = 0.0;
  cplx term = 1.0;
  for (int m = 0; m <= i; ++m) {
    sum += term;
    term *= z / static_cast<double>(m + 1);
  }
  double fact = 1.0;
  for (int m = 2; m <= i; ++m) fact *= m;
  const double sign = (i % 2 == 0) ? 1.0 : -1.0;
  return fact * sign / std::pow(lambda, i + 1) * (std::exp(-z) * sum - 1.0);
}

constexpr double kWindowTarget = 1e-12;

template <class F>
double integrate_window(F&& g, double a, double b, double* err_sum) {
  if (b <= a) return 0.0;
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double error = 0.0;
  double l1 = 0.0;
  double value = GK::integrate(g, a, b, 0, 0.0, &error, &l1);
  if (error > kWindowTarget) {
    // Bisect toward the absolute target. The depth stays small: panels
    // already isolate the kinks, so what remains is evaluation noise.
    value = GK::integrate(g, a, b, 6, kWindowTarget / std::max(l1, 1e-300), &error, &l1);
  }
  if (error > std::max(kWindowTarget, 1e-12 * l1) * 100.0) {
    throw QuadratureError("adaptive quadrature missed its target on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]",
                          error);
  }
  if (err_sum != nullptr) *err_sum += error;
  return value;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_grid(const std::vector<double>& grid) {
  if (grid.size() < 8) throw std::invalid_argument("X grid needs at least 8 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("X grid points must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw std::invalid_argument("X grid must be strictly increasing");
  }
  if (grid.back() < 100.0 * grid.front()) throw std::invalid_argument("X grid must span at least two decades");
}

std::size_t grid_tail(std::size_t n) { return std::max<std::size_t>(3, n / 4); }

}  // namespace

struct Integrand::Impl {
  std::string name;
  std::variant<Exponential, PowerLog, Chain, Sampled> body;
  double panel = 1.0;
};

Integrand::Integrand(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

Integrand Integrand::sine(double a) {
  if (a == 0.0) return constant(0.0);
  Integrand f(std::make_shared<Impl>(Impl{"sin", Exponential{cplx(0.0, a), true, 1.0}, 0.5 / std::abs(a)}));
  f.verify_chain(4);
  return f;
}

Integrand Integrand::cosine(double a) {
  Integrand f(std::make_shared<Impl>(
      Impl{"cos", Exponential{cplx(0.0, a), false, 1.0}, a == 0.0 ? 1.0 : 0.5 / std::abs(a)}));
  f.verify_chain(4);
  return f;
}

Integrand Integrand::exp_decay() {
  Integrand f(std::make_shared<Impl>(Impl{"exp", Exponential{cplx(-1.0, 0.0), false, 1.0}, 1.0}));
  f.verify_chain(4);
  return f;
}

Integrand Integrand::power_log(double alpha, int p) {
  if (!(alpha > -1.0)) {
    throw std::invalid_argument("t^alpha (ln t)^p with alpha <= -1 is not locally integrable at 0; "
                                "use the finite-part routines");
  }
  if (p < 0) throw std::invalid_argument("log power must be non-negative");
  Integrand f(std::make_shared<Impl>(Impl{"power", PowerLog{PowerLogSeries<double>::monomial(1.0, alpha, p)}, 1.0}));
  f.verify_chain(4);
  return f;
}

Integrand Integrand::constant(double c) {
  Integrand f(std::make_shared<Impl>(Impl{"constant", PowerLog{PowerLogSeries<double>::monomial(c, 0.0, 0)}, 1.0}));
  return f;
}

Integrand Integrand::from_primitives(std::vector<RealFunction> chain, std::string name) {
  if (chain.empty()) throw std::invalid_argument("primitive chain is empty");
  const int depth = static_cast<int>(chain.size()) - 1;
  Integrand f(std::make_shared<Impl>(Impl{std::move(name), Chain{std::move(chain)}, 1.0}));
  f.verify_chain(depth);
  return f;
}

Integrand Integrand::sampled(RealFunction f, double panel, std::string name) {
  if (!f) throw std::invalid_argument("sampled integrand has no callable");
  if (!(panel > 0.0)) throw std::invalid_argument("panel width must be positive");
  return Integrand(std::make_shared<Impl>(Impl{std::move(name), Sampled{std::move(f)}, panel}));
}

void Integrand::verify_chain(int depth) const {
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> dist(0.5, 16.0);
  for (int i = 0; i < 32; ++i) {
    const double x = dist(rng);
    const double h = 1e-5 * x;
    for (int j = 1; j <= depth; ++j) {
      const double slope = (primitive(j, x + h) - primitive(j, x - h)) / (2.0 * h);
      const double expect = primitive(j - 1, x);
      const double scale = std::max({1.0, std::abs(expect), std::abs(primitive(j, x)) / x});
      if (!(std::abs(slope - expect) <= 1e-6 * scale)) {
        throw std::invalid_argument("antiderivative " + std::to_string(j) + " of '" + impl_->name +
                                    "' does not differentiate to its predecessor at x=" + std::to_string(x));
      }
    }
  }
}

Integrand::Kind Integrand::kind() const {
  return std::holds_alternative<Sampled>(impl_->body) ? Kind::sampled : Kind::closed_form;
}

const std::string& Integrand::name() const { return impl_->name; }
double Integrand::panel() const { return impl_->panel; }

double Integrand::operator()(double t) const {
  return std::visit(
      [t](const auto& b) -> double {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, Exponential>) {
          return select(b, std::exp(b.lambda * t));
        } else if constexpr (std::is_same_v<B, PowerLog>) {
          return b.series(t);
        } else if constexpr (std::is_same_v<B, Chain>) {
          return b.links.front()(t);
        } else {
          return b.f(t);
        }
      },
      impl_->body);
}

int Integrand::closed_primitive_depth() const {
  if (const auto* c = std::get_if<Chain>(&impl_->body)) return static_cast<int>(c->links.size()) - 1;
  if (std::holds_alternative<Sampled>(impl_->body)) return -1;
  return std::numeric_limits<int>::max();
}

double Integrand::primitive(int j, double x) const {
  if (j < 0) throw std::invalid_argument("primitive order must be non-negative");
  if (j == 0) return (*this)(x);
  return std::visit(
      [j, x, this](const auto& b) -> double {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, Exponential>) {
          return select(b, exp_primitive(b.lambda, j, x));
        } else if constexpr (std::is_same_v<B, PowerLog>) {
          if (x == 0.0) return 0.0;
          return b.series.primitive(j)(x);
        } else if constexpr (std::is_same_v<B, Chain>) {
          if (j >= static_cast<int>(b.links.size())) {
            throw std::logic_error("primitive " + std::to_string(j) + " not supplied for '" + impl_->name + "'");
          }
          return b.links[static_cast<std::size_t>(j)](x);
        } else {
          throw std::logic_error("sampled integrand '" + impl_->name + "' has no closed-form primitives");
        }
      },
      impl_->body);
}

std::optional<double> Integrand::moment(int i, double X) const {
  if (const auto* e = std::get_if<Exponential>(&impl_->body)) return select(*e, exp_moment(e->lambda, i, X));
  if (const auto* p = std::get_if<PowerLog>(&impl_->body)) {
    if (X == 0.0) return 0.0;
    return p->series.shifted(static_cast<double>(i)).primitive()(X);
  }
  return std::nullopt;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) throw std::invalid_argument("geometric_grid needs 0 < lo < hi, count >= 2");
  std::vector<double> grid(count);
  const double ratio = std::log(hi / lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = lo * std::exp(ratio * static_cast<double>(i));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_integral_grid() { return geometric_grid(1e2, 1e5, 16); }

double riesz_mean(const Integrand& f, double k, double X) {
  if (!(k > -1.0)) throw std::invalid_argument("Riesz order k must exceed -1");
  if (!(X > 0.0)) throw std::invalid_argument("Riesz bound X must be positive");

  const bool integer_k = std::floor(k) == k;
  if (integer_k && f.kind() == Integrand::Kind::closed_form) {
    const int kk = static_cast<int>(k);
    if (f.moment(0, X)) {
      // (1 - t/X)^k = sum_i C(k,i) (-t/X)^i
      double acc = 0.0;
      double coeff = 1.0;
      for (int i = 0; i <= kk; ++i) {
        acc += coeff * *f.moment(i, X);
        coeff *= -static_cast<double>(kk - i) / (static_cast<double>(i + 1) * X);
      }
      return acc;
    }
    if (f.closed_primitive_depth() >= kk + 1) {
      // Cauchy's repeated-integration formula: int_0^X (X-t)^k/k! f = F_{k+1}(X).
      return factorial(kk) * f.primitive(kk + 1, X) / std::pow(X, kk);
    }
  }

  const double w = f.panel();
  auto weighted = [&f, k, X](double t) {
    const double base = 1.0 - t / X;
    return (base <= 0.0 ? (k == 0.0 ? 1.0 : 0.0) : std::pow(base, k)) * f(t);
  };
  double total = 0.0;
  double err = 0.0;
  double a = 0.0;
  while (a < X) {
    const double b = std::min(X, std::floor(a / w + 1.0 + 1e-12) * w);
    if (a == 0.0 || (b >= X && !integer_k)) {
      // Possible endpoint singularity (integrand at 0, weight at X).
      boost::math::quadrature::tanh_sinh<double> ts;
      double e = 0.0;
      // tanh_sinh passes the exact distance to the nearer endpoint as tc;
      // near X that keeps 1 - t/X from cancelling.
      auto weighted_tc = [&f, k, X, b, &weighted](double t, double tc) {
        if (b < X || tc <= 0.0) return weighted(t);
        return std::pow(tc / X, k) * f(t);
      };
      total += ts.integrate(weighted_tc, a, b, 1e-14, &e);
      err += e;
    } else {
      total += integrate_window(weighted, a, b, &err);
    }
    a = b;
  }
  return total;
}

std::vector<std::vector<double>> primitives_on_grid(const Integrand& f, int k, const std::vector<double>& grid) {
  if (k < 0) throw std::invalid_argument("primitive order must be non-negative");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("grid must be strictly increasing");
  }
  std::vector<std::vector<double>> out(grid.size(), std::vector<double>(static_cast<std::size_t>(k)));
  if (k == 0) return out;

  if (f.closed_primitive_depth() >= k) {
    for (std::size_t g = 0; g < grid.size(); ++g) {
      for (int j = 1; j <= k; ++j) out[g][static_cast<std::size_t>(j - 1)] = f.primitive(j, grid[g]);
    }
    return out;
  }

  // F_j(b) = sum_{i<j} F_{j-i}(a) h^i/i! + int_a^b (b-t)^{j-1}/(j-1)! f(t) dt
  auto advance = [&f, k](const std::vector<double>& state, double a, double b) {
    const double h = b - a;
    std::vector<double> next(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
      double carry = 0.0;
      double hp = 1.0;
      for (int i = 0; i < j; ++i) {
        carry += state[static_cast<std::size_t>(j - i - 1)] * hp;
        hp *= h / static_cast<double>(i + 1);
      }
      const double fj = factorial(j - 1);
      auto kernel = [&f, b, j, fj](double t) { return std::pow(b - t, j - 1) / fj * f(t); };
      next[static_cast<std::size_t>(j - 1)] = carry + integrate_window(kernel, a, b, nullptr);
    }
    return next;
  };

  const double w = f.panel();
  std::vector<double> state(static_cast<std::size_t>(k), 0.0);
  double at = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double X = grid[g];
    if (X < at) throw std::invalid_argument("grid must start at or after 0");
    double next = std::floor(at / w + 1.0 + 1e-12) * w;
    while (next <= X) {
      state = advance(state, at, next);
      at = next;
      next = std::floor(at / w + 1.0 + 1e-12) * w;
    }
    out[g] = (X > at) ? advance(state, at, X) : state;
  }
  return out;
}

CesaroEvaluation cesaro_integral(const Integrand& f, double k, const std::vector<double>& grid, double tol) {
  check_grid(grid);
  std::vector<LimitSample> samples;
  samples.reserve(grid.size());
  for (double X : grid) samples.push_back({X, riesz_mean(f, k, X)});
  return judge_tail(samples, grid_tail(grid.size()), tol, k, grid.size());
}

namespace {

CesaroEvaluation normalized_primitive(const Integrand& f, int k, int shift, const std::vector<double>& grid,
                                      double tol) {
  if (k < 0) throw std::invalid_argument("Cesaro order k must be a non-negative integer");
  check_grid(grid);
  const int depth = k + shift;
  std::vector<LimitSample> samples;
  samples.reserve(grid.size());
  if (depth == 0) {
    for (double X : grid) samples.push_back({X, f(X)});
  } else {
    const auto prims = primitives_on_grid(f, depth, grid);
    const double kf = factorial(k);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double X = grid[g];
      samples.push_back({X, kf * prims[g][static_cast<std::size_t>(depth - 1)] / std::pow(X, k)});
    }
  }
  return judge_tail(samples, grid_tail(grid.size()), tol, k, grid.size());
}

}  // namespace

CesaroEvaluation primitive_limit(const Integrand& f, int k, const std::vector<double>& grid, double tol) {
  return normalized_primitive(f, k, 0, grid, tol);
}

CesaroEvaluation integral_primitive_limit(const Integrand& f, int k, const std::vector<double>& grid, double tol) {
  return normalized_primitive(f, k, 1, grid, tol);
}

}  // namespace gensum

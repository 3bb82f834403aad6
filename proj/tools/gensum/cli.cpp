#include "gensum/cli.hpp"

#include "gensum/cesaro_integral.hpp"
#include "gensum/cesaro_series.hpp"
#include "gensum/exact_core.hpp"
#include "gensum/finite_part.hpp"
#include "gensum/output_record.hpp"
#include "gensum/zeta_limits.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

namespace gensum::cli {

namespace {

std::int64_t parse_int(const std::string& text, const char* what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
  return v;
}

double parse_real(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string(what) + " must be a number, got '" + text + "'");
}

// Exact value of a literal like "-2", "3/4" or "-2.5"; nullopt for forms
// such as "1e-3" that are kept as floats.
std::optional<Rational> parse_exact(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text);
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    try {
      return Rational::parse(text);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
  try {
    return Rational::parse(digits) / Rational(10).pow(static_cast<std::int64_t>(text.size() - dot - 1));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// "lo:hi:step", inclusive of hi up to rounding.
std::vector<double> parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = text.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) throw std::invalid_argument("--alpha-range must be lo:hi:step");
  const double lo = parse_real(text.substr(0, a), "range start");
  const double hi = parse_real(text.substr(a + 1, b - a - 1), "range end");
  const double step = parse_real(text.substr(b + 1), "range step");
  if (!(step > 0.0) || hi < lo) throw std::invalid_argument("--alpha-range needs lo <= hi and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 1000) throw std::invalid_argument("--alpha-range expands to more than 1000 values");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

struct Settings {
  std::string format = "text";
  bool strict = false;
  std::optional<double> order;
  std::optional<double> xmax;
  std::optional<std::int64_t> terms;
  std::optional<double> tol;
  std::optional<std::string> alpha;
  std::optional<std::string> alpha_range;
  std::string method = "riesz";
  std::vector<std::string> positional;
};

const std::string& arg(const Settings& s, std::size_t i, const char* what) {
  if (i >= s.positional.size()) throw CLI::ValidationError(std::string("missing argument ") + what);
  return s.positional[i];
}

void expect_args(const Settings& s, std::size_t lo, std::size_t hi) {
  if (s.positional.size() < lo || s.positional.size() > hi) {
    throw CLI::ValidationError("wrong number of arguments");
  }
}

std::optional<int> integer_order(const Settings& s) {
  if (!s.order) return std::nullopt;
  if (*s.order != std::floor(*s.order)) throw std::invalid_argument("--order must be an integer here");
  return static_cast<int>(*s.order);
}

using Records = std::vector<OutputRecord>;

Records cmd_bernoulli(const Settings& s) {
  expect_args(s, 1, 1);
  const auto n = parse_int(arg(s, 0, "N"), "N");
  if (n < 0) throw std::invalid_argument("bernoulli needs N >= 0");
  OutputRecord r{"bernoulli"};
  r.inputs["n"] = n;
  const auto b = bernoulli(static_cast<int>(n));
  r.exact = b.str();
  r.value = b.to_double();
  return {r};
}

Records cmd_faulhaber(const Settings& s) {
  expect_args(s, 2, 2);
  const auto n = parse_int(arg(s, 0, "N"), "N");
  const auto m = parse_int(arg(s, 1, "M"), "M");
  OutputRecord r{"faulhaber"};
  r.inputs["n"] = n;
  r.inputs["m"] = m;
  const auto v = faulhaber_sum(static_cast<int>(n), m);
  r.exact = v.str();
  r.value = v.to_double();
  return {r};
}

Records cmd_zeta(const Settings& s) {
  expect_args(s, 1, 1);
  const auto at = parse_int(arg(s, 0, "S"), "S");
  if (at > 0) throw std::invalid_argument("exact zeta is available at S <= 0 only; use zeta-estimate");
  OutputRecord r{"zeta"};
  r.inputs["s"] = at;
  const auto v = zeta_neg_int(static_cast<int>(-at));
  r.exact = v.str();
  r.value = v.to_double();
  return {r};
}

Records zeta_estimates(const Settings& s, bool prime) {
  expect_args(s, 0, 0);
  if (s.alpha.has_value() == s.alpha_range.has_value()) {
    throw CLI::ValidationError("give exactly one of --alpha and --alpha-range");
  }
  const auto alphas = s.alpha ? std::vector<double>{parse_real(*s.alpha, "--alpha")} : parse_range(*s.alpha_range);
  const auto k = integer_order(s);
  const double xmax = s.xmax.value_or(1e4);
  const double tol = s.tol.value_or(1e-3);
  const char* name = prime ? "zeta-prime-estimate" : "zeta-estimate";

  auto job = [=](double alpha) {
    OutputRecord r{name};
    r.inputs["alpha"] = alpha;
    if (k) r.inputs["order"] = *k;
    r.inputs["xmax"] = xmax;
    r.inputs["tol"] = tol;
    auto e = prime ? zeta_prime_via_cesaro(alpha, k, xmax, tol) : zeta_via_cesaro(alpha, k, xmax, tol);
    r.value = e.value;
    if (!prime && alpha >= 0 && alpha == std::floor(alpha) && alpha <= 1000) {
      r.exact = zeta_neg_int(static_cast<int>(alpha)).str();
    }
    r.evaluation = std::move(e);
    return r;
  };

  Records out;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < alphas.size(); start += width) {
    std::vector<std::future<OutputRecord>> batch;
    for (std::size_t i = start; i < std::min(alphas.size(), start + width); ++i) {
      batch.push_back(std::async(std::launch::async, job, alphas[i]));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

// r^n by squaring; long double pow is slow and crawls through denormals.
long double integer_power(long double r, std::int64_t n) {
  if (n == 0) return 1.0L;
  const long double log2_size = static_cast<long double>(n) * std::log2(std::abs(r));
  const bool negative = r < 0 && n % 2 == 1;
  if (log2_size < -16500.0L) return negative ? -0.0L : 0.0L;
  if (log2_size > 16400.0L) {
    const auto inf = std::numeric_limits<long double>::infinity();
    return negative ? -inf : inf;
  }
  long double result = 1.0L;
  long double base = r;
  for (auto e = n; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

SeriesSpec named_series(const Settings& s, OutputRecord& r) {
  std::string name = arg(s, 0, "SEQUENCE");
  std::optional<std::string> param;
  if (name.rfind("power-", 0) == 0) {
    param = name.substr(6);
    name = "power";
  } else if (s.positional.size() > 1) {
    param = s.positional[1];
  }
  r.inputs["sequence"] = name;
  if (name == "alt-sign" || name == "alt-sign-n") {
    if (param) throw CLI::ValidationError(name + " takes no parameter");
    if (name == "alt-sign") return {[](std::int64_t n) { return n % 2 == 0 ? 1.0L : -1.0L; }, 0, {}};
    return {[](std::int64_t n) { return (n % 2 == 0 ? 1.0L : -1.0L) * static_cast<long double>(n); }, 0, {}};
  }
  if (name == "geometric" || name == "power") {
    if (!param) throw CLI::ValidationError(name + " needs a parameter");
    const long double p = parse_real(*param, "sequence parameter");
    r.inputs["parameter"] = static_cast<double>(p);
    if (name == "geometric") return {[p](std::int64_t n) { return integer_power(p, n); }, 0, {}};
    return {[p](std::int64_t n) { return std::pow(static_cast<long double>(n), p); }, 1, {}};
  }
  throw CLI::ValidationError("unknown sequence '" + name + "' (alt-sign, alt-sign-n, geometric R, power P)");
}

Records cmd_cesaro_sum(const Settings& s) {
  expect_args(s, 1, 2);
  OutputRecord r{"cesaro-sum"};
  const auto series = named_series(s, r);
  const auto terms = s.terms.value_or(1000000);
  const double tol = s.tol.value_or(1e-6);
  const auto k = integer_order(s);
  r.inputs["terms"] = terms;
  r.inputs["tol"] = tol;
  if (k) {
    r.inputs["order"] = *k;
    r.evaluation = cesaro_sum(series, *k, terms, tol);
  } else {
    constexpr int k_max = 6;
    auto found = detect_order(series, k_max, terms, tol);
    // on failure report order 0, whose trace shows the raw partial sums
    r.evaluation = found ? found->second : cesaro_sum(series, 0, terms, tol);
  }
  r.value = r.evaluation->value;
  return {r};
}

Integrand named_integrand(const Settings& s, OutputRecord& r) {
  const std::string& name = arg(s, 0, "INTEGRAND");
  r.inputs["integrand"] = name;
  auto param = [&](const char* what) {
    const double v = parse_real(arg(s, 1, what), what);
    r.inputs["parameter"] = v;
    return v;
  };
  if (name == "sin") return Integrand::sine(param("A"));
  if (name == "cos") return Integrand::cosine(param("A"));
  if (name == "power") return Integrand::power_log(param("ALPHA"));
  if (s.positional.size() > 1) throw CLI::ValidationError(name + " takes no parameter");
  if (name == "exp") return Integrand::exp_decay();
  if (name == "square-wave") {
    return Integrand::sampled([](double t) { return t - std::floor(t) < 0.5 ? 1.0 : -1.0; }, 0.5, "square-wave");
  }
  throw CLI::ValidationError("unknown integrand '" + name + "' (sin A, cos A, exp, power ALPHA, square-wave)");
}

Records cmd_cesaro_int(const Settings& s) {
  expect_args(s, 1, 2);
  OutputRecord r{"cesaro-int"};
  const auto f = named_integrand(s, r);
  const double xmax = s.xmax.value_or(1e5);
  const double tol = s.tol.value_or(1e-6);
  const auto grid = geometric_grid(xmax / 1000.0, xmax, 16);
  r.inputs["method"] = s.method;
  r.inputs["xmax"] = xmax;
  r.inputs["tol"] = tol;
  if (s.method == "riesz") {
    const double k = s.order.value_or(1.0);
    r.inputs["order"] = k;
    r.evaluation = cesaro_integral(f, k, grid, tol);
  } else {
    const int k = integer_order(s).value_or(1);
    r.inputs["order"] = k;
    r.evaluation = integral_primitive_limit(f, k, grid, tol);
  }
  r.value = r.evaluation->value;
  return {r};
}

Records fp_command(const Settings& s, bool log_weight) {
  expect_args(s, 1, 2);
  OutputRecord r{log_weight ? "fp-log-int" : "fp-int"};
  const std::string& alpha_text = arg(s, 0, "ALPHA");
  const std::string b_text = s.positional.size() > 1 ? s.positional[1] : "1";
  const auto qa = parse_exact(alpha_text);
  const auto qb = parse_exact(b_text);
  const double alpha = qa ? qa->to_double() : parse_real(alpha_text, "ALPHA");
  const double b = qb ? qb->to_double() : parse_real(b_text, "B");
  r.inputs["alpha"] = alpha_text;
  r.inputs["b"] = b_text;
  r.value = log_weight ? fp_log_power_integral(alpha, b) : fp_power_integral(alpha, b);
  if (qa && qb) {
    const auto q = log_weight ? fp_log_power_integral_exact(*qa, *qb) : fp_power_integral_exact(*qa, *qb);
    if (q) r.exact = q->str();
  }
  return {r};
}

Records cmd_pm_poly(const Settings& s) {
  expect_args(s, 2, 2);
  const auto n = parse_int(arg(s, 0, "N"), "N");
  const auto m = parse_int(arg(s, 1, "M"), "M");
  OutputRecord r{"pm-poly"};
  r.inputs["n"] = n;
  r.inputs["m"] = m;
  const auto p = pm_polynomial(static_cast<int>(n), static_cast<int>(m));
  for (const auto& c : p.coeffs()) r.coefficients.push_back(c.str());
  const auto mean = periodic_mean(p);
  r.exact = mean.str();
  r.value = mean.to_double();
  return {r};
}

void emit(const Records& records, const std::string& format, std::ostream& out) {
  for (const auto& r : records) out << (format == "structured" ? r.to_json_line() : r.to_text());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  if (const char* env = std::getenv("GENSUM_FORMAT"); env != nullptr && *env != '\0') s.format = env;

  CLI::App app{"Generalized summation toolkit"};
  app.name("gensum");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", s.format, "text or structured (JSON Lines)")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--strict", s.strict, "exit with status 2 when a numeric limit did not converge");

  std::function<Records(const Settings&)> handler;
  auto sub = [&](const char* name, const char* help, const char* args_help, std::function<Records(const Settings&)> h) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("args", s.positional, args_help);
    c->callback([&handler, h] { handler = h; });
    return c;
  };

  sub("bernoulli", "exact Bernoulli number B_N", "N", cmd_bernoulli);
  sub("faulhaber", "exact sum_{k=1}^{M-1} k^N", "N M", cmd_faulhaber);
  sub("zeta", "exact zeta(S) for integer S <= 0", "S", cmd_zeta);
  for (bool prime : {false, true}) {
    auto* c = sub(prime ? "zeta-prime-estimate" : "zeta-estimate",
                  prime ? "zeta'(-alpha) from the Cesaro limit of the log-weighted staircase"
                        : "zeta(-alpha) from the Cesaro limit of the staircase",
                  "(none)", [prime](const Settings& st) { return zeta_estimates(st, prime); });
    c->add_option("--alpha", s.alpha, "exponent alpha");
    c->add_option("--alpha-range", s.alpha_range, "lo:hi:step sweep, one record per alpha");
    c->add_option("--order", s.order, "Cesaro order k (default max(0, ceil(alpha) + 1))");
    c->add_option("--xmax", s.xmax, "last integer boundary (default 1e4)");
    c->add_option("--tol", s.tol, "tail spread tolerance (default 1e-3)");
  }
  {
    auto* c = sub("cesaro-sum", "(C,k) sum of a built-in sequence", "alt-sign | alt-sign-n | geometric R | power P",
                  cmd_cesaro_sum);
    c->add_option("--order", s.order, "Cesaro order k (default: smallest k <= 6 that converges)");
    c->add_option("--terms", s.terms, "number of terms N (default 1e6)");
    c->add_option("--tol", s.tol, "tail spread tolerance (default 1e-6)");
  }
  {
    auto* c = sub("cesaro-int", "(C,k) mean of int_0^inf f", "sin A | cos A | exp | power ALPHA | square-wave",
                  cmd_cesaro_int);
    c->add_option("--order", s.order, "order k (default 1; real for riesz, integer for primitive)");
    c->add_option("--xmax", s.xmax, "largest X; the grid spans three decades below it (default 1e5)");
    c->add_option("--tol", s.tol, "tail spread tolerance (default 1e-6)");
    c->add_option("--method", s.method, "riesz or primitive")->check(CLI::IsMember({"riesz", "primitive"}));
  }
  sub("fp-int", "F.p. int_0^B t^ALPHA dt (B defaults to 1)", "ALPHA [B]", [](const Settings& st) {
    return fp_command(st, false);
  });
  sub("fp-log-int", "F.p. int_0^B t^ALPHA ln t dt (B defaults to 1)", "ALPHA [B]", [](const Settings& st) {
    return fp_command(st, true);
  });
  sub("pm-poly", "periodic polynomial P_M for exponent N, with its mean", "N M", cmd_pm_poly);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (s.format != "text" && s.format != "structured") {
      throw CLI::ValidationError("format must be text or structured (check GENSUM_FORMAT)");
    }
    const auto records = handler(s);
    emit(records, s.format, out);
    if (s.strict) {
      for (const auto& r : records) {
        if (!r.converged()) return not_converged;
      }
    }
    return ok;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::Error& e) {
    err << "gensum: " << e.what() << '\n';
    return usage_or_domain_error;
  } catch (const std::exception& e) {
    err << "gensum: " << e.what() << '\n';
    return usage_or_domain_error;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace gensum::cli

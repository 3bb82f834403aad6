#include "gensum/output_record.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gensum::cli {

using nlohmann::ordered_json;

namespace {

// JSON has no inf/nan; those become null.
ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

double number_from(const ordered_json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string text_scalar(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_double(j.get<double>());
  return j.dump();
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ordered_json OutputRecord::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs;
  ordered_json result = ordered_json::object();
  if (exact) result["exact"] = *exact;
  if (value) result["value"] = number(*value);
  if (!coefficients.empty()) result["coefficients"] = coefficients;
  j["result"] = result;
  if (evaluation) {
    const auto& e = *evaluation;
    ordered_json trace = ordered_json::array();
    for (const auto& s : e.trace) trace.push_back({{"at", number(s.at)}, {"value", number(s.value)}});
    j["diagnostics"] = {{"order", e.order},
                        {"n_terms", e.n_terms},
                        {"error_estimate", number(e.error_estimate)},
                        {"converged", e.converged},
                        {"tolerance", e.tolerance},
                        {"trace", trace}};
  }
  return j;
}

OutputRecord OutputRecord::from_json(const ordered_json& j) {
  OutputRecord r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  const auto& result = j.at("result");
  if (result.contains("exact")) r.exact = result["exact"].get<std::string>();
  if (result.contains("value")) r.value = number_from(result["value"]);
  if (result.contains("coefficients")) r.coefficients = result["coefficients"].get<std::vector<std::string>>();
  if (j.contains("diagnostics")) {
    const auto& d = j["diagnostics"];
    CesaroEvaluation e;
    e.order = d.at("order").get<double>();
    e.n_terms = d.at("n_terms").get<std::size_t>();
    e.error_estimate = number_from(d.at("error_estimate"));
    e.converged = d.at("converged").get<bool>();
    e.tolerance = d.at("tolerance").get<double>();
    for (const auto& s : d.at("trace")) e.trace.push_back({number_from(s.at("at")), number_from(s.at("value"))});
    e.value = r.value.value_or(0.0);
    r.evaluation = e;
  }
  return r;
}

std::string OutputRecord::to_text() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  for (const auto& [key, v] : inputs.items()) out << "input." << key << ": " << text_scalar(v) << '\n';
  if (exact) out << "exact: " << *exact << '\n';
  if (value) out << "value: " << format_double(*value) << '\n';
  if (!coefficients.empty()) {
    out << "coefficients:";
    for (const auto& c : coefficients) out << ' ' << c;
    out << '\n';
  }
  if (evaluation) {
    const auto& e = *evaluation;
    out << "order: " << format_double(e.order) << '\n'
        << "n_terms: " << e.n_terms << '\n'
        << "error_estimate: " << format_double(e.error_estimate) << '\n'
        << "converged: " << (e.converged ? "true" : "false") << '\n'
        << "tolerance: " << format_double(e.tolerance) << '\n';
    for (const auto& s : e.trace) out << "trace: " << format_double(s.at) << ' ' << format_double(s.value) << '\n';
  }
  return out.str();
}

std::string OutputRecord::to_json_line() const { return to_json().dump() + '\n'; }

}  // namespace gensum::cli

#pragma once

#include "gensum/cesaro_evaluation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gensum::cli {

/// One result of a CLI invocation.
struct OutputRecord {
  OutputRecord() = default;
  explicit OutputRecord(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();

  std::optional<std::string> exact;
  std::optional<double> value;
  std::vector<std::string> coefficients;

  std::optional<CesaroEvaluation> evaluation;

  nlohmann::ordered_json to_json() const;
  static OutputRecord from_json(const nlohmann::ordered_json& j);

  /// `key: value` lines, one field per line.
  std::string to_text() const;
  /// A single JSON line.
  std::string to_json_line() const;

  bool converged() const { return !evaluation || evaluation->converged; }
};

/// %.17g, with "inf", "-inf" and "nan" spelled out.
std::string format_double(double x);

}  // namespace gensum::cli

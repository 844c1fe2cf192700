#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualcount/suites.hpp"

namespace dualcount::cli {

enum class Format { Text, Json, Csv };

struct RunConfig {
  std::string command;
  std::string suite;  // verify only
  std::optional<std::string> gamma;
  std::optional<std::string> target;
  std::optional<std::string> side;
  std::optional<int> n;
  std::optional<int> min_n;
  std::optional<int> max_n;
  std::optional<int> max_rank;
  std::optional<int> order;
  std::optional<std::string> pair;
  std::optional<std::string> type;
  std::optional<std::string> prop;
  std::optional<std::string> params;
  std::optional<std::string> expr;
  std::optional<std::string> refined;
  std::optional<int> random;
  std::optional<unsigned long long> seed;
  bool enable_e7_smatrix = false;
  Format format = Format::Text;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;  // meaningful when config is empty (help or usage error)
  std::string message;
};

/// Parses argv without the program name. Unknown flags and positional extras are usage errors.
ParseOutcome parse_args(const std::vector<std::string>& args);
/// Canonical argument list that parses back to the same config.
std::vector<std::string> to_args(const RunConfig& c);

SuiteConfig suite_config(const RunConfig& c);
std::string to_string(Format f);

}  // namespace dualcount::cli

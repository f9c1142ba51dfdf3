#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hurwitz::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitVerificationFailed = 3,
};

struct Check {
  std::string name;
  bool pass = false;
  Json detail = Json::object();
};

struct ReportError {
  std::string kind;  // usage | parse | domain | resource | internal
  std::string message;
};

/// Everything a subcommand emits. Serialization is deterministic: the same
/// report always produces the same bytes.
struct Report {
  std::string command;
  std::vector<std::string> argv;
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::optional<ReportError> error;

  // Optional tabular view, used by the CSV writer.
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_json_text() const;
  /// The table when present, otherwise key,value lines flattened from `result`.
  [[nodiscard]] std::string to_csv() const;
};

/// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace hurwitz::cli

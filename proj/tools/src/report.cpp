#include "hurwitz_cli/report.hpp"

#include <sstream>

namespace hurwitz::cli {

Json Report::to_json() const {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["argv"] = argv;
  j["inputs"] = inputs;
  if (error) {
    j["error"] = {{"kind", error->kind}, {"message", error->message}};
  } else {
    j["result"] = result;
  }
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks_json.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks_json);
  j["warnings"] = warnings;
  return j;
}

std::string Report::to_json_text() const { return to_json().dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

void flatten(const std::string& prefix, const Json& value, std::ostringstream& out) {
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) flatten(prefix.empty() ? key : prefix + "." + key, v, out);
    return;
  }
  const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  out << csv_field(prefix) << ',' << csv_field(text) << '\n';
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  if (error) {
    out << "error_kind,error_message\n" << csv_field(error->kind) << ',' << csv_field(error->message) << '\n';
    return out.str();
  }
  if (!columns.empty()) {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
    return out.str();
  }
  out << "key,value\n";
  flatten("", result, out);
  return out.str();
}

}  // namespace hurwitz::cli

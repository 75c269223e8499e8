#pragma once

#include <string>
#include <utility>
#include <vector>

namespace commtop {

inline constexpr const char* kReportVersion = "1";

struct ReportRow {
  std::string key;
  std::string text;        // human-readable value
  std::string value_json;  // the same value as a JSON fragment
  std::string ref;         // which result of the source this row reproduces
  std::string status;      // "", "pass", "fail", "pinned"
};

struct Report {
  std::string command;
  std::string subject;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<ReportRow> rows;
  bool ok = true;

  /// Aligned table.
  std::string to_text() const;
  /// Single JSON document; byte-identical for identical inputs.
  std::string to_json() const;
};

}  // namespace commtop

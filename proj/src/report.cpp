#include "commtop/report.hpp"

#include <json.hpp>

#include <algorithm>

namespace commtop {

std::string Report::to_text() const {
  std::string out = command;
  if (!subject.empty()) out += "  " + subject;
  out += "\n";
  for (const auto& [k, v] : inputs) out += "  " + k + " = " + v + "\n";
  std::size_t wk = 3, wv = 5;
  for (const auto& r : rows) {
    wk = std::max(wk, r.key.size());
    wv = std::max(wv, r.text.size());
  }
  wv = std::min<std::size_t>(wv, 48);
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  out += pad("key", wk) + "  " + pad("value", wv) + "  status  ref\n";
  for (const auto& r : rows)
    out += pad(r.key, wk) + "  " + pad(r.text, wv) + "  " + pad(r.status.empty() ? "-" : r.status, 6) + "  " + r.ref +
           "\n";
  out += ok ? "ok\n" : "FAILED\n";
  return out;
}

std::string Report::to_json() const {
  using json = nlohmann::ordered_json;
  json doc;
  doc["version"] = kReportVersion;
  doc["command"] = command;
  doc["subject"] = subject;
  json in = json::object();
  for (const auto& [k, v] : inputs) in[k] = v;
  doc["inputs"] = std::move(in);
  doc["ok"] = ok;
  json rs = json::array();
  for (const auto& r : rows) {
    json row;
    row["key"] = r.key;
    row["value"] = json::parse(r.value_json);
    row["text"] = r.text;
    row["ref"] = r.ref;
    if (!r.status.empty()) row["status"] = r.status;
    rs.push_back(std::move(row));
  }
  doc["results"] = std::move(rs);
  return doc.dump(2) + "\n";
}

}  // namespace commtop

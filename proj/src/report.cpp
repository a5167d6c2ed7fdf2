// Copyright 2026 The Tritime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tritime/report.hpp"

#include <charconv>
#include <cmath>

#include "tritime/errors.hpp"

namespace tritime {

using nlohmann::json;

Summary Report::summary() const {
  Summary s;
  s.total = entries.size();
  for (const auto& e : entries) {
    if (e.pass) ++s.passed;
  }
  s.failed = s.total - s.passed;
  return s;
}

json to_json(const Report& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"name", e.name},
                       {"inputs", e.inputs},
                       {"value", e.value},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass},
                       {"detail", e.detail}});
  }
  const Summary s = r.summary();
  return json{{"schema_version", r.schema_version},
              {"version", r.version},
              {"command", r.command},
              {"seed", r.seed},
              {"entries", entries},
              {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}},
              {"data", r.data}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    if (r.schema_version != kSchemaVersion) {
      throw ConfigError("schema_version: unsupported '" + r.schema_version + "'");
    }
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& e : j.at("entries")) {
      ReportEntry entry;
      entry.name = e.at("name").get<std::string>();
      entry.inputs = e.at("inputs");
      entry.value = e.at("value").get<double>();
      entry.tolerance = e.at("tolerance").get<double>();
      entry.pass = e.at("pass").get<bool>();
      entry.detail = e.value("detail", json::object());
      r.entries.push_back(std::move(entry));
    }
    r.data = j.value("data", json::array());
    const Summary s = r.summary();
    const auto& stored = j.at("summary");
    if (stored.at("total").get<std::size_t>() != s.total ||
        stored.at("passed").get<std::size_t>() != s.passed ||
        stored.at("failed").get<std::size_t>() != s.failed) {
      throw ConfigError("summary: counts do not tally with entries");
    }
    return r;
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("report: ") + ex.what());
  }
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Report& r) {
  std::string out = "name,inputs,value,tolerance,pass\n";
  for (const auto& e : r.entries) {
    out += csv_field(e.name) + ',' + csv_field(e.inputs.dump()) + ',' + format_number(e.value) +
           ',' + format_number(e.tolerance) + ',' + (e.pass ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace tritime

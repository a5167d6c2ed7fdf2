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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace tritime {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kToolVersion = "tritime 1.0.0";

struct ReportEntry {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Free-form per-check extras (e.g. admissibility of a winding number).
  nlohmann::json detail = nlohmann::json::object();

  bool operator==(const ReportEntry&) const = default;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool operator==(const Summary&) const = default;
};

struct Report {
  std::string schema_version = kSchemaVersion;
  std::string version = kToolVersion;
  std::string command;
  std::uint64_t seed = 0;
  std::vector<ReportEntry> entries;
  /// Plot-ready rows emitted by simulation commands.
  nlohmann::json data = nlohmann::json::array();

  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  Summary summary() const;
  bool all_pass() const { return summary().failed == 0; }

  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
/// Throws ConfigError on schema mismatch or when the stored summary does not
/// tally with the entries.
Report report_from_json(const nlohmann::json& j);

/// Shortest round-trip decimal form, '.' separator.
std::string format_number(double x);
/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

/// name,inputs,value,tolerance,pass with LF terminators.
std::string to_csv(const Report& r);

}  // namespace tritime

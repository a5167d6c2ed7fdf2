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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tritime/geometry.hpp"
#include "tritime/hidden_time_sim.hpp"
#include "tritime/random.hpp"

namespace tritime {

enum class Command { VerifySpinors, Winding, Bw, Simulate };
enum class OutputFormat { Json, Csv };

Command parse_command(const std::string& name);
std::string to_string(Command c);
OutputFormat parse_format(const std::string& name);

struct KinematicsCase {
  double m = 1.0;
  Velocity3 v;
  /// Mass used in the Dirac operator instead of m (deliberate violations).
  std::optional<double> operator_mass;
};

/// Named tolerances and their defaults.
const std::map<std::string, double>& default_tolerances();

struct RunConfig {
  Command command = Command::VerifySpinors;
  std::uint64_t seed = kDefaultSeed;
  std::map<std::string, double> tolerances = default_tolerances();
  /// Configured cases; randomized ones are appended when the command runs.
  std::vector<KinematicsCase> kinematics{
      {1.0, {0.0, 0.0, 0.0}, std::nullopt}, {1.0, {0.0, 0.0, 0.6}, std::nullopt},
      {1.0, {0.6, 0.0, 0.0}, std::nullopt}, {2.0, {0.6, 0.0, 0.0}, std::nullopt},
      {2.5, {0.0, 0.0, 0.0}, std::nullopt}};
  int random_cases = 100;
  OutputFormat format = OutputFormat::Json;
  std::string output_path;  // empty: stdout
  unsigned partitions = 1;

  std::vector<double> g_values{0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.0, 0.25, 0.3, 0.7};
  int loop_intervals = 360;
  int order = 2;
  std::uint64_t samples = 1000000;
  TwoSlitConfig experiment = TwoSlitConfig::standard();

  double tolerance(const std::string& name) const;
};

/// Overlays a configuration document onto `base`. Unknown keys and bad
/// values raise ConfigError naming the field.
RunConfig apply_config(RunConfig base, const nlohmann::json& doc);
RunConfig load_config_file(RunConfig base, const std::string& path);

}  // namespace tritime

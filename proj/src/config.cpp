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

#include "tritime/config.hpp"

#include <fstream>
#include <set>

#include "tritime/errors.hpp"

namespace tritime {

using nlohmann::json;

namespace {

double number_at(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field + ": expected a number");
  return j.get<double>();
}

std::uint64_t unsigned_at(const json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ConfigError(field + ": expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Velocity3 velocity_at(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(field + ": expected [v1, v2, v3]");
  Velocity3 v{number_at(j[0], field + "[0]"), number_at(j[1], field + "[1]"),
              number_at(j[2], field + "[2]")};
  if (!(v.speed() < 1.0)) throw ConfigError(field + ": speed must be below 1");
  return v;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& prefix) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(prefix + key + ": unknown field");
  }
}

TwoSlitConfig experiment_at(const json& j) {
  if (!j.is_object()) throw ConfigError("experiment: expected an object");
  reject_unknown(j, {"detector_bins", "slits"}, "experiment.");
  TwoSlitConfig c;
  if (!j.contains("detector_bins")) throw ConfigError("experiment.detector_bins: missing");
  c.detector_bins = static_cast<int>(unsigned_at(j["detector_bins"], "experiment.detector_bins"));
  if (!j.contains("slits") || !j["slits"].is_array()) {
    throw ConfigError("experiment.slits: expected an array");
  }
  for (std::size_t i = 0; i < j["slits"].size(); ++i) {
    const auto& s = j["slits"][i];
    const std::string field = "experiment.slits[" + std::to_string(i) + "]";
    if (!s.is_object()) throw ConfigError(field + ": expected an object");
    reject_unknown(s, {"label", "start", "end", "open", "bins"}, field + ".");
    SlitSpec slit;
    slit.label = s.value("label", "slit" + std::to_string(i));
    if (!s.contains("start")) throw ConfigError(field + ".start: missing");
    if (!s.contains("end")) throw ConfigError(field + ".end: missing");
    slit.start = number_at(s["start"], field + ".start");
    slit.end = number_at(s["end"], field + ".end");
    if (s.contains("open")) {
      if (!s["open"].is_boolean()) throw ConfigError(field + ".open: expected a boolean");
      slit.open = s["open"].get<bool>();
    }
    if (!s.contains("bins") || !s["bins"].is_array()) {
      throw ConfigError(field + ".bins: expected an array of bin indices");
    }
    for (std::size_t k = 0; k < s["bins"].size(); ++k) {
      const auto& b = s["bins"][k];
      if (!b.is_number_integer()) {
        throw ConfigError(field + ".bins[" + std::to_string(k) + "]: expected an integer");
      }
      slit.bins.push_back(b.get<int>());
    }
    c.slits.push_back(std::move(slit));
  }
  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("experiment.") + e.what());
  }
  return c;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "verify-spinors") return Command::VerifySpinors;
  if (name == "winding") return Command::Winding;
  if (name == "bw") return Command::Bw;
  if (name == "simulate") return Command::Simulate;
  throw ConfigError("command: unknown '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::VerifySpinors:
      return "verify-spinors";
    case Command::Winding:
      return "winding";
    case Command::Bw:
      return "bw";
    case Command::Simulate:
      return "simulate";
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ConfigError("format: expected json or csv, got '" + name + "'");
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t{
      {"dirac_residual", 1e-12}, {"lorentz_norm", 1e-12}, {"sandwich", 1e-10},
      {"hyperbolic_constraint", 1e-12}, {"time_field", 1e-12}, {"bw_residual", 1e-10},
      {"bw_symmetry", 1e-12}, {"winding_residue", 1e-3}};
  return t;
}

double RunConfig::tolerance(const std::string& name) const { return tolerances.at(name); }

RunConfig apply_config(RunConfig cfg, const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(doc,
                 {"seed", "format", "partitions", "random_cases", "tolerances", "kinematics",
                  "g_values", "loop_intervals", "order", "samples", "experiment"},
                 "");
  if (doc.contains("seed")) cfg.seed = unsigned_at(doc["seed"], "seed");
  if (doc.contains("format")) {
    if (!doc["format"].is_string()) throw ConfigError("format: expected a string");
    cfg.format = parse_format(doc["format"].get<std::string>());
  }
  if (doc.contains("partitions")) {
    cfg.partitions = static_cast<unsigned>(unsigned_at(doc["partitions"], "partitions"));
    if (cfg.partitions == 0) throw ConfigError("partitions: must be at least 1");
  }
  if (doc.contains("random_cases")) {
    cfg.random_cases = static_cast<int>(unsigned_at(doc["random_cases"], "random_cases"));
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) throw ConfigError("tolerances: expected an object");
    for (const auto& [name, value] : t.items()) {
      if (!default_tolerances().contains(name)) {
        throw ConfigError("tolerances." + name + ": unknown check");
      }
      const double tol = number_at(value, "tolerances." + name);
      if (!(tol >= 0.0)) throw ConfigError("tolerances." + name + ": must be non-negative");
      cfg.tolerances[name] = tol;
    }
  }
  if (doc.contains("kinematics")) {
    const auto& ks = doc["kinematics"];
    if (!ks.is_array()) throw ConfigError("kinematics: expected an array");
    cfg.kinematics.clear();
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const std::string field = "kinematics[" + std::to_string(i) + "]";
      const auto& k = ks[i];
      if (!k.is_object()) throw ConfigError(field + ": expected an object");
      reject_unknown(k, {"m", "v", "operator_mass"}, field + ".");
      KinematicsCase c;
      if (!k.contains("m")) throw ConfigError(field + ".m: missing");
      c.m = number_at(k["m"], field + ".m");
      if (!(c.m > 0.0)) throw ConfigError(field + ".m: must be positive");
      if (k.contains("v")) c.v = velocity_at(k["v"], field + ".v");
      if (k.contains("operator_mass")) {
        c.operator_mass = number_at(k["operator_mass"], field + ".operator_mass");
      }
      cfg.kinematics.push_back(c);
    }
  }
  if (doc.contains("g_values")) {
    const auto& gs = doc["g_values"];
    if (!gs.is_array()) throw ConfigError("g_values: expected an array");
    cfg.g_values.clear();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      cfg.g_values.push_back(number_at(gs[i], "g_values[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("loop_intervals")) {
    cfg.loop_intervals = static_cast<int>(unsigned_at(doc["loop_intervals"], "loop_intervals"));
    if (cfg.loop_intervals < 7) throw ConfigError("loop_intervals: must be at least 7");
  }
  if (doc.contains("order")) cfg.order = static_cast<int>(unsigned_at(doc["order"], "order"));
  if (doc.contains("samples")) {
    cfg.samples = unsigned_at(doc["samples"], "samples");
    if (cfg.samples == 0) throw ConfigError("samples: must be at least 1");
  }
  if (doc.contains("experiment")) cfg.experiment = experiment_at(doc["experiment"]);
  return cfg;
}

RunConfig load_config_file(RunConfig base, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + std::string(e.what()));
  }
  return apply_config(std::move(base), doc);
}

}  // namespace tritime

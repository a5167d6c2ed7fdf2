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

// Command-line front end: verify-spinors, winding, bw, simulate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tritime/commands.hpp"
#include "tritime/config.hpp"
#include "tritime/errors.hpp"

namespace {

constexpr int kUsageError = 2;

struct Flags {
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;
  std::string config;
  std::optional<std::uint64_t> n;
  std::optional<int> order;
  std::optional<unsigned> partitions;
  std::string g_list;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--seed", f.seed, "Master RNG seed");
  sub->add_option("--out", f.out, "Output file (default stdout)");
  sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--config", f.config, "Configuration document (JSON)");
  sub->add_option("--partitions", f.partitions, "Worker threads for sampling")
      ->check(CLI::PositiveNumber);
}

std::vector<double> parse_g_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw tritime::ConfigError("--g: cannot parse '" + item + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-dimensional time verification and simulation"};
  app.require_subcommand(1);
  Flags flags;

  auto* verify = app.add_subcommand("verify-spinors", "Dirac spinor checks");
  auto* winding = app.add_subcommand("winding", "Quantization and winding checks");
  auto* bw = app.add_subcommand("bw", "Bargmann-Wigner multi-spinor checks");
  auto* simulate = app.add_subcommand("simulate", "Hidden-time-angle two-slit simulation");
  for (auto* sub : {verify, winding, bw, simulate}) add_common(sub, flags);
  winding->add_option("--g", flags.g_list, "Comma-separated winding numbers");
  bw->add_option("--order", flags.order, "Multi-spinor order (1..4)");
  simulate->add_option("--n", flags.n, "Number of samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    tritime::RunConfig cfg;
    cfg.command = tritime::parse_command(app.get_subcommands().front()->get_name());
    if (!flags.config.empty()) cfg = tritime::load_config_file(cfg, flags.config);
    if (flags.seed) cfg.seed = *flags.seed;
    if (!flags.format.empty()) cfg.format = tritime::parse_format(flags.format);
    if (flags.partitions) cfg.partitions = *flags.partitions;
    if (!flags.g_list.empty()) cfg.g_values = parse_g_list(flags.g_list);
    if (flags.order) cfg.order = *flags.order;
    if (flags.n) {
      if (*flags.n == 0) throw tritime::ConfigError("--n: must be at least 1");
      cfg.samples = *flags.n;
    }
    if (!flags.out.empty()) cfg.output_path = flags.out;

    const tritime::RunResult result = tritime::run_command(cfg);
    if (cfg.output_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) throw tritime::ConfigError("--out: cannot open '" + cfg.output_path + "'");
      out << result.output;
    }
    const auto s = result.report.summary();
    std::cerr << result.report.command << ": " << s.passed << "/" << s.total << " checks passed\n";
    return result.exit_code;
  } catch (const tritime::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

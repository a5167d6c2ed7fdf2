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

#include "tritime/commands.hpp"

#include <cmath>
#include <vector>

#include "tritime/dirac_verify.hpp"
#include "tritime/errors.hpp"
#include "tritime/hopf.hpp"
#include "tritime/spinors.hpp"

namespace tritime {

using nlohmann::json;

namespace {

json case_inputs(const KinematicsCase& k, const char* source) {
  json j{{"m", k.m}, {"v", {k.v.v1, k.v.v2, k.v.v3}}, {"source", source}};
  if (k.operator_mass) j["operator_mass"] = *k.operator_mass;
  return j;
}

ReportEntry bounded(std::string name, json inputs, double value, double tol) {
  ReportEntry e;
  e.name = std::move(name);
  e.inputs = std::move(inputs);
  e.value = value;
  e.tolerance = tol;
  e.pass = std::isfinite(value) && value < tol;
  return e;
}

std::vector<std::pair<KinematicsCase, const char*>> all_cases(const RunConfig& cfg) {
  std::vector<std::pair<KinematicsCase, const char*>> out;
  for (const auto& k : cfg.kinematics) out.emplace_back(k, "configured");
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.random_cases; ++i) out.emplace_back(random_kinematics(rng), "random");
  return out;
}

}  // namespace

KinematicsCase random_kinematics(Rng& rng) {
  KinematicsCase k;
  k.m = rng.uniform(0.1, 10.0);
  const double speed = rng.uniform(0.0, 0.99);
  double x = 0.0, y = 0.0, z = 0.0, r = 0.0;
  do {
    x = rng.normal();
    y = rng.normal();
    z = rng.normal();
    r = std::sqrt(x * x + y * y + z * z);
  } while (r < 1e-9);
  k.v = Velocity3{speed * x / r, speed * y / r, speed * z / r};
  return k;
}

Report cmd_verify_spinors(const RunConfig& cfg) {
  const GammaSet g = standard_gamma_set();
  Report report;
  report.command = to_string(Command::VerifySpinors);
  report.seed = cfg.seed;
  for (const auto& [k, source] : all_cases(cfg)) {
    const json base = case_inputs(k, source);
    for (Branch b : kAllBranches) {
      const PlaneWaveState state{make_spinor(k.m, k.v, b)};
      json in = base;
      in["branch"] = std::string(to_string(b));
      const double sign = is_positive(b) ? 1.0 : -1.0;
      report.add(bounded("dirac_residual", in, dirac_residual(state, g, k.operator_mass),
                         cfg.tolerance("dirac_residual")));
      report.add(bounded("lorentz_norm", in, std::abs(lorentz_norm(state.spinor) - sign),
                         cfg.tolerance("lorentz_norm")));
      report.add(bounded("sandwich", in, std::abs(sandwich_identity(state, g) - sign * k.m),
                         cfg.tolerance("sandwich")));
    }
    const TimeAngleCoord c = coord_from_velocity(k.v);
    const auto z = reduced_coordinates(c);
    report.add(bounded("hyperbolic_constraint", base,
                       std::abs(hyperbolic_constraint_residual(z[0], z[1])),
                       cfg.tolerance("hyperbolic_constraint")));
    const FourMomentum p = FourMomentum::from_velocity(k.m, k.v);
    const double contraction = time_field_contraction(c, time_field(c, p));
    report.add(bounded("time_field", base, std::abs(std::abs(contraction) - k.m),
                       cfg.tolerance("time_field")));
  }
  return report;
}

Report cmd_winding(const RunConfig& cfg) {
  Report report;
  report.command = to_string(Command::Winding);
  report.seed = cfg.seed;
  const double residue_tol = cfg.tolerance("winding_residue");
  for (double gv : cfg.g_values) {
    const WindingNumber g(gv);
    ReportEntry e;
    e.name = "winding";
    e.inputs = {{"g", gv}, {"intervals", cfg.loop_intervals}};
    e.tolerance = residue_tol;
    const bool admissible = quantization_check(g);
    e.detail["admissible"] = admissible;
    try {
      const auto samples = sample_transition_loop(g, cfg.loop_intervals);
      const double turns = unwrapped_turns(samples);
      const std::int64_t winding = compute_winding(samples);
      const double residue = winding_residue(samples);
      e.value = turns;
      e.detail["winding"] = winding;
      e.detail["residue"] = residue;
      const bool integral = residue < residue_tol;
      e.pass = admissible == integral;
      if (admissible) e.pass = e.pass && g.twice() && winding == -*g.twice();
    } catch (const SamplingError& ex) {
      e.value = 0.0;
      e.pass = false;
      e.detail["error"] = ex.what();
    }
    report.add(std::move(e));
  }
  return report;
}

Report cmd_bw(const RunConfig& cfg) {
  if (cfg.order < 1 || cfg.order > 4) {
    throw ConfigError("order: must be in 1..4, got " + std::to_string(cfg.order));
  }
  const GammaSet g = standard_gamma_set();
  Report report;
  report.command = to_string(Command::Bw);
  report.seed = cfg.seed;
  for (const auto& [k, source] : all_cases(cfg)) {
    json base = case_inputs(k, source);
    base["order"] = cfg.order;
    const DiracSpinor up = positive_energy_spinor(k.m, k.v, SubBranch::Up);
    const DiracSpinor down = positive_energy_spinor(k.m, k.v, SubBranch::Down);

    const std::vector<DiracSpinor> identical(static_cast<std::size_t>(cfg.order), up);
    const MultiSpinor ms = bw_product(identical);
    std::vector<DiracSpinor> mixed;
    for (int i = 0; i < cfg.order; ++i) mixed.push_back(i % 2 == 0 ? up : down);
    const MultiSpinor sym = symmetrize(bw_product(mixed));

    for (int idx = 1; idx <= cfg.order; ++idx) {
      json in = base;
      in["index"] = idx;
      report.add(bounded("bw_residual", in, bw_residual(ms, g, idx, k.operator_mass),
                         cfg.tolerance("bw_residual")));
      report.add(bounded("bw_residual_symmetrized", in,
                         bw_residual(sym, g, idx, k.operator_mass),
                         cfg.tolerance("bw_residual")));
    }
    report.add(bounded("bw_symmetry", base, permutation_asymmetry(ms),
                       cfg.tolerance("bw_symmetry")));
    report.add(bounded("bw_symmetry_symmetrized", base, permutation_asymmetry(sym),
                       cfg.tolerance("bw_symmetry")));
  }
  return report;
}

Report cmd_simulate(const RunConfig& cfg) {
  const TwoSlitResult r = two_slit_experiment(cfg.experiment, cfg.samples, cfg.seed,
                                              cfg.partitions);
  Report report;
  report.command = to_string(Command::Simulate);
  report.seed = cfg.seed;
  auto emit = [&](const std::string& bin, double p, double freq, double bound, bool pass) {
    ReportEntry e;
    e.name = "bin";
    e.inputs = {{"bin", bin}, {"n", cfg.samples}};
    e.value = std::abs(freq - p);
    e.tolerance = bound;
    e.pass = pass;
    e.detail = {{"analytic_p", p}, {"mc_freq", freq}};
    report.add(std::move(e));
    report.data.push_back(
        {{"bin", bin}, {"analytic_p", p}, {"mc_freq", freq}, {"bound", bound}, {"pass", pass}});
  };
  for (const auto& b : r.bins) {
    emit(std::to_string(b.bin), b.analytic_p, b.mc_freq, b.bound, b.pass);
  }
  emit("MISS", r.analytic_miss, r.mc_miss, binomial_bound(r.analytic_miss, r.n),
       within_binomial_bound(r.mc_miss, r.analytic_miss, r.n));
  return report;
}

std::string simulation_csv(const Report& r) {
  std::string out = "bin,analytic_p,mc_freq,bound,pass\n";
  for (const auto& row : r.data) {
    out += csv_field(row.at("bin").get<std::string>()) + ',' +
           format_number(row.at("analytic_p").get<double>()) + ',' +
           format_number(row.at("mc_freq").get<double>()) + ',' +
           format_number(row.at("bound").get<double>()) + ',' +
           (row.at("pass").get<bool>() ? "true" : "false") + '\n';
  }
  return out;
}

RunResult run_command(const RunConfig& cfg) {
  RunResult result;
  switch (cfg.command) {
    case Command::VerifySpinors:
      result.report = cmd_verify_spinors(cfg);
      break;
    case Command::Winding:
      result.report = cmd_winding(cfg);
      break;
    case Command::Bw:
      result.report = cmd_bw(cfg);
      break;
    case Command::Simulate:
      result.report = cmd_simulate(cfg);
      break;
  }
  if (cfg.format == OutputFormat::Json) {
    result.output = to_json(result.report).dump(2) + "\n";
  } else if (cfg.command == Command::Simulate) {
    result.output = simulation_csv(result.report);
  } else {
    result.output = to_csv(result.report);
  }
  result.exit_code = result.report.all_pass() ? 0 : 1;
  return result;
}

}  // namespace tritime

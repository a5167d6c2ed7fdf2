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

#include <string>

#include "tritime/config.hpp"
#include "tritime/random.hpp"
#include "tritime/report.hpp"

namespace tritime {

/// m uniform in [0.1, 10], speed uniform in [0, 0.99], direction uniform on
/// the sphere.
KinematicsCase random_kinematics(Rng& rng);

/// Dirac residual, Lorentz norm and sandwich identity on all four branches,
/// plus the reduced hyperbolic constraint and the time-field contraction,
/// over configured and randomized kinematics.
Report cmd_verify_spinors(const RunConfig& cfg);
/// Quantization check against the unwrapped winding of each g.
Report cmd_winding(const RunConfig& cfg);
/// Bargmann-Wigner residual on every index and permutation symmetry for
/// products of `order` equal-momentum spinors. Throws ConfigError unless
/// 1 <= order <= 4.
Report cmd_bw(const RunConfig& cfg);
/// Two-slit angular-fraction statistics against binomial bounds.
Report cmd_simulate(const RunConfig& cfg);

struct RunResult {
  Report report;
  /// Rendered in cfg.format.
  std::string output;
  /// 0 iff every entry passes, 1 otherwise.
  int exit_code = 0;
};

RunResult run_command(const RunConfig& cfg);

/// bin,analytic_p,mc_freq,bound,pass rows of a simulate report.
std::string simulation_csv(const Report& r);

}  // namespace tritime

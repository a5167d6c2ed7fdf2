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

#include "tritime/spinors.hpp"

#include <cmath>
#include <string>

#include "tritime/errors.hpp"

namespace tritime {
namespace {

struct Chart {
  double scale;  // cosh(t_theta/2) = sqrt((m+E)/2m)
  double along;  // tanh(t_theta/2) cos t_phi = p3/(m+E)
  Complex across;  // tanh(t_theta/2) sin t_phi e^{i az} = (p1 + i p2)/(m+E)
};

Chart chart_from_velocity(const Velocity3& v) {
  const VelocityAngles a = angles_from_velocity(v);
  const double half = 0.5 * a.t_theta;
  const double r = std::tanh(half);
  return Chart{std::cosh(half), r * std::cos(a.t_phi), r * std::sin(a.t_phi) * a.azimuth};
}

void check_mass(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("rest mass must be positive, got " + std::to_string(m));
  }
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::PosUp:
      return "PosUp";
    case Branch::PosDown:
      return "PosDown";
    case Branch::NegUp:
      return "NegUp";
    case Branch::NegDown:
      return "NegDown";
  }
  return "?";
}

Branch parse_branch(std::string_view name) {
  for (Branch b : kAllBranches) {
    if (to_string(b) == name) return b;
  }
  throw DomainError("unknown branch '" + std::string(name) + "'");
}

DiracSpinor positive_energy_spinor(double m, const Velocity3& v, SubBranch sub) {
  check_mass(m);
  const FourMomentum p = FourMomentum::from_velocity(m, v);
  const Chart ch = chart_from_velocity(v);
  DiracSpinor u;
  u.momentum = p;
  if (sub == SubBranch::Up) {
    u.branch = Branch::PosUp;
    u.components = {ch.scale, 0.0, ch.scale * ch.along, ch.scale * ch.across};
  } else {
    // Rows (1,2) and (3,4) interchanged, v_s -> v1 - i v2; the sign of the
    // p3 row is the one that keeps the spinor on shell.
    u.branch = Branch::PosDown;
    u.components = {0.0, ch.scale, ch.scale * std::conj(ch.across), -ch.scale * ch.along};
  }
  return u;
}

DiracSpinor negative_energy_spinor(double m, const Velocity3& v, SubBranch sub) {
  check_mass(m);
  const FourMomentum p = FourMomentum::from_velocity(m, v);
  const Chart ch = chart_from_velocity(v);
  DiracSpinor w;
  w.momentum = p;
  if (sub == SubBranch::Up) {
    w.branch = Branch::NegUp;
    w.components = {ch.scale * ch.along, ch.scale * ch.across, ch.scale, 0.0};
  } else {
    w.branch = Branch::NegDown;
    w.components = {ch.scale * std::conj(ch.across), -ch.scale * ch.along, 0.0, ch.scale};
  }
  return w;
}

DiracSpinor make_spinor(double m, const Velocity3& v, Branch branch) {
  switch (branch) {
    case Branch::PosUp:
      return positive_energy_spinor(m, v, SubBranch::Up);
    case Branch::PosDown:
      return positive_energy_spinor(m, v, SubBranch::Down);
    case Branch::NegUp:
      return negative_energy_spinor(m, v, SubBranch::Up);
    case Branch::NegDown:
      return negative_energy_spinor(m, v, SubBranch::Down);
  }
  throw DomainError("unknown branch");
}

DiracSpinor general_spinor(double m, const Velocity3& v) {
  check_mass(m);
  const FourMomentum p = FourMomentum::from_velocity(m, v);
  const double denom = m + p.e;
  const double n = std::sqrt(denom / (2.0 * m));
  const std::array<double, 3> mom{p.p1, p.p2, p.p3};
  std::array<Complex, 2> lower{};
  for (int k = 1; k <= 3; ++k) {
    const auto s = pauli(k);
    lower[0] += mom[k - 1] * s[0][0];
    lower[1] += mom[k - 1] * s[1][0];
  }
  DiracSpinor u;
  u.momentum = p;
  u.branch = Branch::PosUp;
  u.components = {n, 0.0, n * lower[0] / denom, n * lower[1] / denom};
  return u;
}

Spinor4 plane_wave_value(const PlaneWaveState& state, const Event4& x) {
  const FourMomentum& p = state.spinor.momentum;
  const double phase = p.e * x[0] - p.p1 * x[1] - p.p2 * x[2] - p.p3 * x[3];
  const double sign = is_positive(state.spinor.branch) ? -1.0 : 1.0;
  const Complex factor = std::polar(1.0, sign * phase);
  Spinor4 out = state.spinor.components;
  for (auto& c : out) c *= factor;
  return out;
}

double lorentz_norm(const DiracSpinor& u) {
  static const GammaSet g = standard_gamma_set();
  return bilinear(u.components, g[0], u.components).real();
}

double lorentz_norm_imag(const DiracSpinor& u) {
  static const GammaSet g = standard_gamma_set();
  return bilinear(u.components, g[0], u.components).imag();
}

}  // namespace tritime

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

#include "tritime/dirac_verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tritime/errors.hpp"

namespace tritime {

std::array<double, 4> phase_momentum(const PlaneWaveState& state) {
  const FourMomentum& p = state.spinor.momentum;
  const double sign = is_positive(state.spinor.branch) ? 1.0 : -1.0;
  return {sign * p.e, -sign * p.p1, -sign * p.p2, -sign * p.p3};
}

double dirac_operator_residual(const Spinor4& u, const std::array<double, 4>& k_lower,
                               double mass, const GammaSet& g) {
  const Mat4 op = g.slash(k_lower) - Mat4::identity() * Complex(mass, 0.0);
  return norm2(op * u);
}

double dirac_residual(const PlaneWaveState& state, const GammaSet& g,
                      std::optional<double> operator_mass) {
  const double mass = operator_mass.value_or(state.spinor.momentum.m);
  return dirac_operator_residual(state.spinor.components, phase_momentum(state), mass, g);
}

Complex sandwich_identity(const PlaneWaveState& state, const GammaSet& g, const Event4& x) {
  const Spinor4 psi = plane_wave_value(state, x);
  const auto k = phase_momentum(state);
  const Complex i(0.0, 1.0);
  Complex total = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    // d_nu psi = -i k_nu psi
    Spinor4 dpsi = psi;
    for (auto& c : dpsi) c *= -i * k[nu];
    total += i * bilinear(psi, g[0] * g[nu], dpsi);
  }
  return total;
}

Complex sandwich_identity_reduced(const PlaneWaveState& state, const GammaSet& g) {
  const FourMomentum& p = state.spinor.momentum;
  const double ps = p.transverse();
  Mat4 gamma_s;
  if (ps > 0.0) gamma_s = g[1] * Complex(p.p1 / ps, 0.0) + g[2] * Complex(p.p2 / ps, 0.0);
  const double sign = is_positive(state.spinor.branch) ? 1.0 : -1.0;
  // Covariant components along (x0, x3, s).
  const std::array<double, 3> k{sign * p.e, -sign * p.p3, -sign * ps};
  const std::array<const Mat4*, 3> gammas{&g[0], &g[3], &gamma_s};
  const Spinor4& u = state.spinor.components;
  const Complex i(0.0, 1.0);
  Complex total = 0.0;
  for (int a = 0; a < 3; ++a) {
    Spinor4 du = u;
    for (auto& c : du) c *= -i * k[a];
    total += i * bilinear(u, g[0] * *gammas[a], du);
  }
  return total;
}

FdSandwich finite_difference_sandwich(const PlaneWaveState& state, const GammaSet& g, double h,
                                      const Event4& x) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const Spinor4 psi = plane_wave_value(state, x);
  const Complex i(0.0, 1.0);
  Complex total = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    Event4 fwd = x;
    Event4 bwd = x;
    fwd[nu] += h;
    bwd[nu] -= h;
    const Spinor4 pf = plane_wave_value(state, fwd);
    const Spinor4 pb = plane_wave_value(state, bwd);
    Spinor4 dpsi{};
    for (int a = 0; a < 4; ++a) dpsi[a] = (pf[a] - pb[a]) / (2.0 * h);
    total += i * bilinear(psi, g[0] * g[nu], dpsi);
  }
  return FdSandwich{total, h < 1e-8};
}

void require_consistent(const TimeAngleCoord& c, const FourMomentum& p) {
  const double pmag = std::sqrt(p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3);
  const double want_theta = std::asinh(pmag / p.m);
  double mismatch = std::abs(c.t_theta() - want_theta);
  if (pmag > 0.0) {
    const double want_phi = std::atan2(p.transverse(), p.p3);
    // Circular distance scaled by sinh t_theta (transverse displacement of n).
    double dphi = std::abs(normalize_angle(c.t_phi() - want_phi));
    dphi = std::min(dphi, kTwoPi - dphi);
    mismatch = std::max(mismatch, dphi * std::sinh(want_theta));
  }
  if (mismatch > 1e-9) {
    std::ostringstream msg;
    msg << "time-angle coordinate inconsistent with four-momentum (mismatch " << mismatch << ")";
    throw ConsistencyError(msg.str(), mismatch);
  }
}

double free_particle_identity(const TimeAngleCoord& c, const FourMomentum& p) {
  require_consistent(c, p);
  const double d0 = p.e;
  const double d3 = -p.p3;
  const double ds = -p.transverse();
  const double sh = std::sinh(c.t_theta());
  return std::cosh(c.t_theta()) * d0 + sh * std::cos(c.t_phi()) * d3 +
         sh * std::sin(c.t_phi()) * ds;
}

TimeField time_field(const TimeAngleCoord& c, const FourMomentum& p) {
  require_consistent(c, p);
  return TimeField{-p.e, p.p3, p.transverse()};
}

double time_field_contraction(const TimeAngleCoord& c, const TimeField& q) {
  const Vec3 n = unit_time_vector(c);
  // Raise Q's index, then contract with the (+, -, -) metric.
  return minkowski_dot(n, Vec3{q.q0, -q.q3, -q.qs});
}

}  // namespace tritime

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

#include <array>
#include <complex>
#include <optional>

#include "tritime/gamma.hpp"
#include "tritime/geometry.hpp"
#include "tritime/spinors.hpp"

namespace tritime {

// Scalar identities are reported as real numbers. The i brought down by
// differentiating e^{i chi} is absorbed once: i psi-bar gamma^nu d_nu psi is
// real and equals +-m, and the directional derivative of the real phase chi
// along the unit time vector equals m.

/// Covariant momentum k_mu with i d_mu psi = k_mu psi for the plane wave:
/// (E, -p) on positive branches, -(E, -p) on negative ones.
std::array<double, 4> phase_momentum(const PlaneWaveState& state);

/// || (gamma^mu k_mu - mass) u ||_2.
double dirac_operator_residual(const Spinor4& u, const std::array<double, 4>& k_lower,
                               double mass, const GammaSet& g);

/// Residual of the Dirac equation for the plane wave. `operator_mass`
/// replaces the spinor's rest mass in the operator when given.
double dirac_residual(const PlaneWaveState& state, const GammaSet& g,
                      std::optional<double> operator_mass = std::nullopt);

/// i psi^dagger g0 g^nu d_nu psi with analytic derivatives, evaluated at x.
/// +m on positive branches, -m on negative ones.
Complex sandwich_identity(const PlaneWaveState& state, const GammaSet& g,
                          const Event4& x = {0.0, 0.0, 0.0, 0.0});

/// The same contraction in (x0, x3, s) coordinates, with the s axis along the
/// transverse momentum and gamma^s = e1 g1 + e2 g2.
Complex sandwich_identity_reduced(const PlaneWaveState& state, const GammaSet& g);

struct FdSandwich {
  Complex value;
  /// Step below 1e-8: cancellation dominates the difference quotient.
  bool precision_warning = false;
};

/// sandwich_identity with central differences (f(x+h) - f(x-h)) / 2h of
/// plane_wave_value along each of the four axes. Error is O(h^2).
FdSandwich finite_difference_sandwich(const PlaneWaveState& state, const GammaSet& g, double h,
                                      const Event4& x = {0.0, 0.0, 0.0, 0.0});

/// Throws ConsistencyError when c's angles are not those of p (tolerance 1e-9).
void require_consistent(const TimeAngleCoord& c, const FourMomentum& p);

/// cosh t_theta d0 chi + sinh t_theta cos t_phi d3 chi + sinh t_theta sin t_phi ds chi
/// with chi = E x0 - p3 x3 - p_s s. Equals m for consistent (c, p).
double free_particle_identity(const TimeAngleCoord& c, const FourMomentum& p);

/// Q = -grad chi in the (x0, x3, s) basis; covariant components.
struct TimeField {
  double q0 = 0.0;
  double q3 = 0.0;
  double qs = 0.0;
};

/// Q = (-E, p3, p_s).
TimeField time_field(const TimeAngleCoord& c, const FourMomentum& p);

/// n^mu Q_mu for the unit time vector of c. Equals -m for consistent input.
double time_field_contraction(const TimeAngleCoord& c, const TimeField& q);

}  // namespace tritime

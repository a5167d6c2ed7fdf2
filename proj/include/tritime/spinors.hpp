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
#include <string_view>

#include "tritime/gamma.hpp"
#include "tritime/geometry.hpp"

namespace tritime {

enum class Branch { PosUp, PosDown, NegUp, NegDown };
enum class SubBranch { Up, Down };

constexpr bool is_positive(Branch b) { return b == Branch::PosUp || b == Branch::PosDown; }
std::string_view to_string(Branch b);
Branch parse_branch(std::string_view name);

inline constexpr std::array<Branch, 4> kAllBranches{Branch::PosUp, Branch::PosDown,
                                                    Branch::NegUp, Branch::NegDown};

struct DiracSpinor {
  Spinor4 components{};
  Branch branch = Branch::PosUp;
  FourMomentum momentum;
};

/// Only one phase convention exists: positive-energy branches carry
/// e^{-i(E x0 - p.x)}, negative-energy branches the conjugate.
enum class PhaseConvention { EMinusIPX };

struct PlaneWaveState {
  DiracSpinor spinor;
  PhaseConvention phase_sign = PhaseConvention::EMinusIPX;
};

/// Event (x0, x1, x2, x3).
using Event4 = std::array<double, 4>;

/// North-hemisphere chart. With c = cosh(t_theta/2), r = tanh(t_theta/2):
///   Up   = c (1, 0, r cos t_phi, r sin t_phi e^{i az})
///   Down = c (0, 1, r sin t_phi e^{-i az}, -r cos t_phi)
/// i.e. sqrt((m+E)/2m) (1, 0, p3/(m+E), (p1 + i p2)/(m+E)) for Up.
/// Throws DomainError for m <= 0 or speed >= 1.
DiracSpinor positive_energy_spinor(double m, const Velocity3& v, SubBranch sub);

/// South-hemisphere chart; solves (gamma.p + m) w = 0:
///   Up   = c (r cos t_phi, r sin t_phi e^{i az}, 1, 0)
///   Down = c (r sin t_phi e^{-i az}, -r cos t_phi, 0, 1)
DiracSpinor negative_energy_spinor(double m, const Velocity3& v, SubBranch sub);

DiracSpinor make_spinor(double m, const Velocity3& v, Branch branch);

/// sqrt((m+E)/2m) (1, 0, (sigma . p)/(m+E) (1, 0)^T), built from explicit
/// Pauli matrices. Representation-free form of the PosUp spinor.
DiracSpinor general_spinor(double m, const Velocity3& v);

/// spinor * e^{-+i(E x0 - p.x)}; minus for positive branches.
Spinor4 plane_wave_value(const PlaneWaveState& state, const Event4& x);

/// Re(u^dagger g0 u).
double lorentz_norm(const DiracSpinor& u);
/// Im(u^dagger g0 u), zero for the diagonal g0 of the Dirac representation.
double lorentz_norm_imag(const DiracSpinor& u);

}  // namespace tritime

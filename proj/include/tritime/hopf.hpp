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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tritime/gamma.hpp"
#include "tritime/spinors.hpp"

namespace tritime {

/// Winding number of a U(1) bundle. Admissible values are half-integers.
class WindingNumber {
 public:
  WindingNumber() = default;
  explicit WindingNumber(double g);
  /// g = twice_g / 2, exactly.
  static WindingNumber half_integer(std::int64_t twice_g);

  double value() const { return value_; }
  /// 2g when it is an integer.
  std::optional<std::int64_t> twice() const { return twice_; }
  /// |e^{-4 pi i g} - 1| < 1e-12.
  bool admissible() const { return admissible_; }

  friend WindingNumber operator+(const WindingNumber& a, const WindingNumber& b);

 private:
  double value_ = 0.0;
  std::optional<std::int64_t> twice_{0};
  bool admissible_ = true;
};

/// Monopole transition function e^{-2 i g phi}.
Complex transition_phase(const WindingNumber& g, double phi);

/// True iff |e^{-4 pi i g} - 1| < 1e-12.
bool quantization_check(const WindingNumber& g);

inline constexpr int kDefaultLoopIntervals = 360;

/// transition_phase at phi_k = 2 pi k / intervals for k = 0..intervals
/// (both endpoints of the counterclockwise loop).
std::vector<Complex> sample_transition_loop(const WindingNumber& g,
                                            int intervals = kDefaultLoopIntervals);

/// Unwrapped phase accumulated along the samples, in turns (units of 2 pi).
/// Needs >= 8 samples and every consecutive jump below pi; throws
/// SamplingError otherwise.
double unwrapped_turns(std::span<const Complex> samples);

/// unwrapped_turns rounded to the nearest integer. -2g for a transition loop.
std::int64_t compute_winding(std::span<const Complex> samples);

/// Distance of unwrapped_turns from the nearest integer.
double winding_residue(std::span<const Complex> samples);

/// Sum of the factors' winding numbers.
WindingNumber winding_of_product(std::span<const WindingNumber> gs);

/// Rank-n multi-spinor, 4^n amplitudes. Index (i1, ..., in) is stored at
/// i1 4^{n-1} + ... + in (first factor most significant).
struct MultiSpinor {
  int order = 0;
  std::vector<Complex> components;
  FourMomentum momentum;

  Complex at(std::span<const int> index) const;
  double norm() const;
};

/// Outer product of same-momentum factors. Throws DomainError on an empty
/// list or mixed momenta.
MultiSpinor bw_product(std::span<const DiracSpinor> factors);

/// Applies (gamma^mu p_mu - mass) to Dirac index k (1-based), identity on the
/// others, and returns the norm of the result. Throws DomainError when k is
/// out of range.
double bw_residual(const MultiSpinor& ms, const GammaSet& g, int k,
                   std::optional<double> operator_mass = std::nullopt);

/// Average over all index permutations.
MultiSpinor symmetrize(const MultiSpinor& ms);

/// max over permutations and entries of |M_sigma(i) - M_i|.
double permutation_asymmetry(const MultiSpinor& ms);

}  // namespace tritime

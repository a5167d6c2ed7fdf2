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

#include "tritime/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "tritime/dirac_verify.hpp"
#include "tritime/errors.hpp"

using namespace tritime;

TEST(TransitionPhase, examples) {
  EXPECT_EQ(transition_phase(WindingNumber(0.0), 1.7), Complex(1.0, 0.0));
  EXPECT_LT(std::abs(transition_phase(WindingNumber(0.5), kTwoPi) - 1.0), 1e-15);
  EXPECT_LT(std::abs(transition_phase(WindingNumber(0.25), kTwoPi) + 1.0), 1e-15);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    EXPECT_NEAR(std::abs(transition_phase(WindingNumber(rng.uniform(-3, 3)), rng.uniform(0, 7))),
                1.0, 1e-15);
  }
}

TEST(TransitionPhase, pointwise_homomorphism) {
  Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const WindingNumber a(rng.uniform(-2, 2));
    const WindingNumber b(rng.uniform(-2, 2));
    const double phi = rng.uniform(0, kTwoPi);
    EXPECT_LT(std::abs(transition_phase(a + b, phi) -
                       transition_phase(a, phi) * transition_phase(b, phi)),
              1e-12);
  }
}

TEST(Quantization, half_integers_admissible) {
  EXPECT_TRUE(quantization_check(WindingNumber(0.5)));
  EXPECT_TRUE(quantization_check(WindingNumber(1.0)));
  EXPECT_TRUE(quantization_check(WindingNumber(-1.5)));
  EXPECT_FALSE(quantization_check(WindingNumber(0.3)));
  EXPECT_FALSE(quantization_check(WindingNumber(0.25)));
  EXPECT_TRUE(WindingNumber(0.5).admissible());
  EXPECT_EQ(WindingNumber(1.5).twice(), 3);
  EXPECT_FALSE(WindingNumber(0.3).twice().has_value());
}

TEST(Winding, examples) {
  const std::vector<Complex> constant(361, Complex(1.0, 0.0));
  EXPECT_EQ(compute_winding(constant), 0);
  EXPECT_EQ(compute_winding(sample_transition_loop(WindingNumber(0.5), 360)), -1);
  EXPECT_EQ(compute_winding(sample_transition_loop(WindingNumber(1.0), 360)), -2);
}

TEST(Winding, brute_force_unwrap_oracle) {
  // Independent unwrap: accumulate differences of atan2 angles, folding each
  // step into (-pi, pi].
  for (double g : {0.5, -1.5, 2.0, 0.25, 0.7}) {
    const auto samples = sample_transition_loop(WindingNumber(g), 360);
    double total = 0.0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
      double d = std::atan2(samples[k].imag(), samples[k].real()) -
                 std::atan2(samples[k - 1].imag(), samples[k - 1].real());
      while (d > std::numbers::pi) d -= kTwoPi;
      while (d <= -std::numbers::pi) d += kTwoPi;
      total += d;
    }
    EXPECT_NEAR(unwrapped_turns(samples), total / kTwoPi, 1e-12) << g;
    EXPECT_NEAR(total / kTwoPi, -2.0 * g, 1e-9) << g;
  }
}

TEST(Winding, quantization_agrees_with_integrality) {
  for (double g : {0.0, 0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.0}) {
    const auto samples = sample_transition_loop(WindingNumber(g), 360);
    EXPECT_TRUE(quantization_check(WindingNumber(g)));
    EXPECT_EQ(compute_winding(samples), static_cast<std::int64_t>(-2 * g));
    EXPECT_LT(winding_residue(samples), 1e-3);
  }
  for (double g : {0.25, 0.3, 0.7}) {
    const auto samples = sample_transition_loop(WindingNumber(g), 360);
    EXPECT_FALSE(quantization_check(WindingNumber(g)));
    EXPECT_GE(winding_residue(samples), 0.1) << g;
  }
}

TEST(Winding, sampling_errors) {
  EXPECT_THROW(compute_winding(std::vector<Complex>(5, 1.0)), SamplingError);
  std::vector<Complex> alternating;
  for (int k = 0; k < 16; ++k) alternating.push_back(k % 2 == 0 ? 1.0 : -1.0);
  EXPECT_THROW(compute_winding(alternating), SamplingError);
  const std::vector<Complex> flip{1, 1, 1, 1, -1, -1, -1, -1};
  EXPECT_THROW(compute_winding(flip), SamplingError);
}

TEST(WindingProduct, sums) {
  const std::vector<WindingNumber> two{WindingNumber(0.5), WindingNumber(0.5)};
  EXPECT_EQ(winding_of_product(two).value(), 1.0);
  EXPECT_EQ(winding_of_product(two).twice(), 2);
  for (int n = 1; n <= 6; ++n) {
    const std::vector<WindingNumber> halves(n, WindingNumber::half_integer(1));
    EXPECT_EQ(winding_of_product(halves).value(), 0.5 * n);
  }
  EXPECT_EQ(winding_of_product({}).value(), 0.0);
}

TEST(BwProduct, examples) {
  const auto rest = positive_energy_spinor(1, {0, 0, 0}, SubBranch::Up);
  const std::vector<DiracSpinor> one{rest};
  const MultiSpinor m1 = bw_product(one);
  EXPECT_EQ(m1.order, 1);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(m1.components[i], rest.components[i]);

  const std::vector<DiracSpinor> two{rest, rest};
  const MultiSpinor m2 = bw_product(two);
  ASSERT_EQ(m2.components.size(), 16u);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_EQ(m2.components[i], Complex(i == 0 ? 1.0 : 0.0));

  const auto u = positive_energy_spinor(1, {0, 0, 0.6}, SubBranch::Up);
  const std::vector<DiracSpinor> uu{u, u};
  const int idx[2] = {2, 2};
  EXPECT_NEAR(bw_product(uu).at(idx).real(), 0.125, 1e-15);
}

TEST(BwProduct, outer_product_brute_force) {
  Rng rng(33);
  const Velocity3 v = fixtures::random_velocity(rng, 0.7);
  const auto a = positive_energy_spinor(2.0, v, SubBranch::Up);
  const auto b = positive_energy_spinor(2.0, v, SubBranch::Down);
  const auto c = positive_energy_spinor(2.0, v, SubBranch::Up);
  const std::vector<DiracSpinor> f{a, b, c};
  const MultiSpinor m = bw_product(f);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const int idx[3] = {i, j, k};
        EXPECT_EQ(m.at(idx), a.components[i] * b.components[j] * c.components[k]);
      }
}

TEST(BwProduct, rejects_mixed_momenta) {
  const std::vector<DiracSpinor> f{positive_energy_spinor(1, {0, 0, 0.1}, SubBranch::Up),
                                   positive_energy_spinor(1, {0, 0, 0.2}, SubBranch::Up)};
  EXPECT_THROW(bw_product(f), DomainError);
  EXPECT_THROW(bw_product(std::vector<DiracSpinor>{}), DomainError);
}

TEST(BwResidual, order_one_equals_dirac_residual) {
  const GammaSet g = standard_gamma_set();
  const auto u = positive_energy_spinor(1.3, {0.2, 0.1, -0.4}, SubBranch::Up);
  const std::vector<DiracSpinor> one{u};
  const MultiSpinor m = bw_product(one);
  EXPECT_DOUBLE_EQ(bw_residual(m, g, 1, 2.0), dirac_residual(PlaneWaveState{u}, g, 2.0));
  EXPECT_DOUBLE_EQ(bw_residual(m, g, 1), dirac_residual(PlaneWaveState{u}, g));
}

TEST(BwResidual, on_shell_products_vanish_on_every_index) {
  const GammaSet g = standard_gamma_set();
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const double m = rng.uniform(0.1, 10);
    const Velocity3 v = fixtures::random_velocity(rng, rng.uniform(0, 0.99));
    for (int n = 1; n <= 3; ++n) {
      std::vector<DiracSpinor> f;
      for (int i = 0; i < n; ++i) {
        f.push_back(positive_energy_spinor(m, v, rng.uniform01() < 0.5 ? SubBranch::Up
                                                                         : SubBranch::Down));
      }
      const MultiSpinor ms = bw_product(f);
      for (int k = 1; k <= n; ++k) EXPECT_LT(bw_residual(ms, g, k), 1e-10);
    }
  }
}

TEST(BwResidual, off_shell_operator) {
  const GammaSet g = standard_gamma_set();
  const auto u = positive_energy_spinor(1.0, {0, 0, 0.6}, SubBranch::Up);
  const std::vector<DiracSpinor> uu{u, u};
  const MultiSpinor ms = bw_product(uu);
  for (int k = 1; k <= 2; ++k) EXPECT_GT(bw_residual(ms, g, k, 2.0), 0.5 * ms.norm());
  EXPECT_THROW(bw_residual(ms, g, 0), DomainError);
  EXPECT_THROW(bw_residual(ms, g, 3), DomainError);
}

TEST(BwSymmetry, identical_factors_are_symmetric) {
  Rng rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const Velocity3 v = fixtures::random_velocity(rng, rng.uniform(0, 0.99));
    const auto u = positive_energy_spinor(rng.uniform(0.1, 10), v, SubBranch::Up);
    for (int n = 1; n <= 3; ++n) {
      const std::vector<DiracSpinor> f(n, u);
      EXPECT_LT(permutation_asymmetry(bw_product(f)), 1e-12);
    }
  }
}

TEST(BwSymmetry, symmetrize_mixed_products) {
  const GammaSet g = standard_gamma_set();
  const Velocity3 v{0.1, 0.5, -0.3};
  const auto up = positive_energy_spinor(1.0, v, SubBranch::Up);
  const auto down = positive_energy_spinor(1.0, v, SubBranch::Down);
  const std::vector<DiracSpinor> f{up, down};
  const MultiSpinor mixed = bw_product(f);
  EXPECT_GT(permutation_asymmetry(mixed), 0.1);
  const MultiSpinor sym = symmetrize(mixed);
  EXPECT_LT(permutation_asymmetry(sym), 1e-15);
  for (int k = 1; k <= 2; ++k) EXPECT_LT(bw_residual(sym, g, k), 1e-12);
  // Symmetrizing twice changes nothing.
  const MultiSpinor again = symmetrize(sym);
  for (std::size_t i = 0; i < sym.components.size(); ++i) {
    EXPECT_LT(std::abs(again.components[i] - sym.components[i]), 1e-15);
  }
}

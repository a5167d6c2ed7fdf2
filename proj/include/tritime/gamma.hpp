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

#include "tritime/geometry.hpp"

namespace tritime {

using Spinor4 = std::array<Complex, 4>;

/// Dense 4x4 complex matrix, row-major.
struct Mat4 {
  std::array<std::array<Complex, 4>, 4> a{};

  Complex& operator()(int i, int j) { return a[i][j]; }
  const Complex& operator()(int i, int j) const { return a[i][j]; }

  static Mat4 identity();
  static Mat4 zero() { return Mat4{}; }

  Mat4 operator+(const Mat4& b) const;
  Mat4 operator-(const Mat4& b) const;
  Mat4 operator*(const Mat4& b) const;
  Mat4 operator*(Complex s) const;
  Spinor4 operator*(const Spinor4& v) const;
  Mat4 adjoint() const;
  /// Largest entry-wise modulus of (this - b).
  double max_abs_diff(const Mat4& b) const;
};

/// Four gamma matrices with metric diag(+1, -1, -1, -1).
class GammaSet {
 public:
  explicit GammaSet(std::array<Mat4, 4> gamma) : gamma_(gamma) {}

  const Mat4& operator[](int mu) const { return gamma_[mu]; }

  /// gamma^mu k_mu for covariant components k = (k_0, k_1, k_2, k_3).
  Mat4 slash(const std::array<double, 4>& k_lower) const;

  /// max over mu, nu of | {g^mu, g^nu} - 2 eta^{mu nu} I |.
  double clifford_defect() const;
  /// max of |g0 - g0^dagger| and |gi + gi^dagger|.
  double hermiticity_defect() const;

 private:
  std::array<Mat4, 4> gamma_;
};

inline constexpr std::array<double, 4> kMetric{1.0, -1.0, -1.0, -1.0};

/// Dirac (sigma_z) representation:
///   g0 = diag(1, 1, -1, -1),  gi = [[0, sigma_i], [-sigma_i, 0]].
GammaSet standard_gamma_set();

/// Pauli matrix sigma_k, k = 1, 2, 3.
std::array<std::array<Complex, 2>, 2> pauli(int k);

/// psi^dagger A phi.
Complex bilinear(const Spinor4& psi, const Mat4& a, const Spinor4& phi);
double norm2(const Spinor4& v);

}  // namespace tritime

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

#include "tritime/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace tritime {

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4 Mat4::operator+(const Mat4& b) const {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = a[i][j] + b(i, j);
  return c;
}

Mat4 Mat4::operator-(const Mat4& b) const {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = a[i][j] - b(i, j);
  return c;
}

Mat4 Mat4::operator*(const Mat4& b) const {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a[i][k] * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

Mat4 Mat4::operator*(Complex s) const {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = a[i][j] * s;
  return c;
}

Spinor4 Mat4::operator*(const Spinor4& v) const {
  Spinor4 out{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) out[i] += a[i][k] * v[k];
  return out;
}

Mat4 Mat4::adjoint() const {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = std::conj(a[j][i]);
  return c;
}

double Mat4::max_abs_diff(const Mat4& b) const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a[i][j] - b(i, j)));
  return worst;
}

Mat4 GammaSet::slash(const std::array<double, 4>& k_lower) const {
  Mat4 out;
  for (int mu = 0; mu < 4; ++mu) out = out + gamma_[mu] * Complex(k_lower[mu], 0.0);
  return out;
}

double GammaSet::clifford_defect() const {
  double worst = 0.0;
  const Mat4 id = Mat4::identity();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const Mat4 anti = gamma_[mu] * gamma_[nu] + gamma_[nu] * gamma_[mu];
      const Mat4 want = mu == nu ? id * Complex(2.0 * kMetric[mu], 0.0) : Mat4::zero();
      worst = std::max(worst, anti.max_abs_diff(want));
    }
  return worst;
}

double GammaSet::hermiticity_defect() const {
  double worst = gamma_[0].max_abs_diff(gamma_[0].adjoint());
  for (int i = 1; i < 4; ++i) {
    worst = std::max(worst, gamma_[i].max_abs_diff(gamma_[i].adjoint() * Complex(-1.0, 0.0)));
  }
  return worst;
}

std::array<std::array<Complex, 2>, 2> pauli(int k) {
  const Complex i(0.0, 1.0);
  switch (k) {
    case 1:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case 2:
      return {{{0.0, -i}, {i, 0.0}}};
    default:
      return {{{1.0, 0.0}, {0.0, -1.0}}};
  }
}

GammaSet standard_gamma_set() {
  std::array<Mat4, 4> g{};
  g[0](0, 0) = 1.0;
  g[0](1, 1) = 1.0;
  g[0](2, 2) = -1.0;
  g[0](3, 3) = -1.0;
  for (int k = 1; k <= 3; ++k) {
    const auto s = pauli(k);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        g[k](r, c + 2) = s[r][c];
        g[k](r + 2, c) = -s[r][c];
      }
  }
  return GammaSet(g);
}

Complex bilinear(const Spinor4& psi, const Mat4& a, const Spinor4& phi) {
  const Spinor4 aphi = a * phi;
  Complex acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(psi[i]) * aphi[i];
  return acc;
}

double norm2(const Spinor4& v) {
  double acc = 0.0;
  for (const auto& c : v) acc += std::norm(c);
  return std::sqrt(acc);
}

}  // namespace tritime

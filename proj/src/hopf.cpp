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
#include <string>

#include "tritime/errors.hpp"

namespace tritime {
namespace {

constexpr double kQuantizationTol = 1e-12;

bool same_momentum(const FourMomentum& a, const FourMomentum& b) {
  const double scale = std::max({1.0, std::abs(a.e), std::abs(b.e)});
  const double tol = 1e-12 * scale;
  return std::abs(a.e - b.e) <= tol && std::abs(a.p1 - b.p1) <= tol &&
         std::abs(a.p2 - b.p2) <= tol && std::abs(a.p3 - b.p3) <= tol &&
         std::abs(a.m - b.m) <= tol;
}

std::size_t pow4(int n) { return std::size_t{1} << (2 * n); }

std::vector<int> digits_of(std::size_t flat, int order) {
  std::vector<int> d(order);
  for (int pos = order - 1; pos >= 0; --pos) {
    d[pos] = static_cast<int>(flat & 3u);
    flat >>= 2;
  }
  return d;
}

std::size_t flat_of(const std::vector<int>& d) {
  std::size_t flat = 0;
  for (int x : d) flat = (flat << 2) | static_cast<std::size_t>(x);
  return flat;
}

}  // namespace

WindingNumber::WindingNumber(double g) : value_(g) {
  const double twice = 2.0 * g;
  const double nearest = std::round(twice);
  if (std::abs(twice - nearest) < 1e-12) {
    twice_ = static_cast<std::int64_t>(nearest);
  } else {
    twice_.reset();
  }
  admissible_ = quantization_check(*this);
}

WindingNumber WindingNumber::half_integer(std::int64_t twice_g) {
  WindingNumber w;
  w.value_ = 0.5 * static_cast<double>(twice_g);
  w.twice_ = twice_g;
  w.admissible_ = true;
  return w;
}

WindingNumber operator+(const WindingNumber& a, const WindingNumber& b) {
  if (a.twice_ && b.twice_) return WindingNumber::half_integer(*a.twice_ + *b.twice_);
  return WindingNumber(a.value_ + b.value_);
}

Complex transition_phase(const WindingNumber& g, double phi) {
  return std::polar(1.0, -2.0 * g.value() * phi);
}

bool quantization_check(const WindingNumber& g) {
  const Complex loop = std::polar(1.0, -4.0 * std::numbers::pi * g.value());
  return std::abs(loop - 1.0) < kQuantizationTol;
}

std::vector<Complex> sample_transition_loop(const WindingNumber& g, int intervals) {
  if (intervals < 7) throw SamplingError("loop needs at least 7 intervals");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(intervals) + 1);
  for (int k = 0; k <= intervals; ++k) {
    out.push_back(transition_phase(g, kTwoPi * k / intervals));
  }
  return out;
}

double unwrapped_turns(std::span<const Complex> samples) {
  if (samples.size() < 8) {
    throw SamplingError("winding needs at least 8 samples, got " +
                        std::to_string(samples.size()));
  }
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
    const double jump = std::arg(samples[k + 1] * std::conj(samples[k]));
    if (std::abs(jump) >= std::numbers::pi) {
      throw SamplingError("phase jump of pi or more between samples " + std::to_string(k) +
                          " and " + std::to_string(k + 1) + "; sample more densely");
    }
    total += jump;
  }
  return total / kTwoPi;
}

std::int64_t compute_winding(std::span<const Complex> samples) {
  return static_cast<std::int64_t>(std::llround(unwrapped_turns(samples)));
}

double winding_residue(std::span<const Complex> samples) {
  const double turns = unwrapped_turns(samples);
  return std::abs(turns - std::round(turns));
}

WindingNumber winding_of_product(std::span<const WindingNumber> gs) {
  WindingNumber total = WindingNumber::half_integer(0);
  for (const auto& g : gs) total = total + g;
  return total;
}

Complex MultiSpinor::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != order) throw DomainError("index rank mismatch");
  std::size_t flat = 0;
  for (int x : index) flat = (flat << 2) | static_cast<std::size_t>(x);
  return components.at(flat);
}

double MultiSpinor::norm() const {
  double acc = 0.0;
  for (const auto& c : components) acc += std::norm(c);
  return std::sqrt(acc);
}

MultiSpinor bw_product(std::span<const DiracSpinor> factors) {
  if (factors.empty()) throw DomainError("multi-spinor needs at least one factor");
  if (factors.size() > 12) throw DomainError("multi-spinor order too large");
  for (const auto& f : factors) {
    if (!same_momentum(f.momentum, factors.front().momentum)) {
      throw DomainError("multi-spinor factors must share one four-momentum");
    }
  }
  MultiSpinor ms;
  ms.order = 1;
  ms.momentum = factors.front().momentum;
  ms.components.assign(factors.front().components.begin(), factors.front().components.end());
  for (std::size_t f = 1; f < factors.size(); ++f) {
    std::vector<Complex> next;
    next.reserve(ms.components.size() * 4);
    for (const auto& lhs : ms.components)
      for (const auto& rhs : factors[f].components) next.push_back(lhs * rhs);
    ms.components = std::move(next);
    ++ms.order;
  }
  return ms;
}

double bw_residual(const MultiSpinor& ms, const GammaSet& g, int k,
                   std::optional<double> operator_mass) {
  if (k < 1 || k > ms.order) {
    throw DomainError("Dirac index " + std::to_string(k) + " out of range 1.." +
                      std::to_string(ms.order));
  }
  const FourMomentum& p = ms.momentum;
  const double mass = operator_mass.value_or(p.m);
  const Mat4 op = g.slash({p.e, -p.p1, -p.p2, -p.p3}) - Mat4::identity() * Complex(mass, 0.0);
  const std::size_t stride = pow4(ms.order - k);
  const std::size_t block = stride * 4;
  double acc = 0.0;
  for (std::size_t base = 0; base < ms.components.size(); base += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      Spinor4 column;
      for (int a = 0; a < 4; ++a) column[a] = ms.components[base + inner + a * stride];
      for (const auto& c : op * column) acc += std::norm(c);
    }
  }
  return std::sqrt(acc);
}

MultiSpinor symmetrize(const MultiSpinor& ms) {
  std::vector<int> perm(ms.order);
  std::iota(perm.begin(), perm.end(), 0);
  MultiSpinor out = ms;
  std::fill(out.components.begin(), out.components.end(), Complex(0.0, 0.0));
  std::size_t count = 0;
  do {
    for (std::size_t flat = 0; flat < ms.components.size(); ++flat) {
      const auto d = digits_of(flat, ms.order);
      std::vector<int> permuted(ms.order);
      for (int pos = 0; pos < ms.order; ++pos) permuted[pos] = d[perm[pos]];
      out.components[flat] += ms.components[flat_of(permuted)];
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& c : out.components) c /= static_cast<double>(count);
  return out;
}

double permutation_asymmetry(const MultiSpinor& ms) {
  std::vector<int> perm(ms.order);
  std::iota(perm.begin(), perm.end(), 0);
  double worst = 0.0;
  do {
    for (std::size_t flat = 0; flat < ms.components.size(); ++flat) {
      const auto d = digits_of(flat, ms.order);
      std::vector<int> permuted(ms.order);
      for (int pos = 0; pos < ms.order; ++pos) permuted[pos] = d[perm[pos]];
      worst = std::max(worst, std::abs(ms.components[flat_of(permuted)] - ms.components[flat]));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return worst;
}

}  // namespace tritime

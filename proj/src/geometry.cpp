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

#include "tritime/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tritime/errors.hpp"

namespace tritime {

double normalize_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round back up to 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

TimeAngleCoord::TimeAngleCoord(double t, double t_theta, double t_phi)
    : t_(t), t_theta_(t_theta), t_phi_(normalize_angle(t_phi)) {
  if (!std::isfinite(t) || t < 0.0) {
    throw DomainError("clock time must be finite and non-negative");
  }
  if (!std::isfinite(t_theta) || t_theta < 0.0) {
    throw DomainError("t_theta must be finite and non-negative");
  }
  if (!std::isfinite(t_phi)) throw DomainError("t_phi must be finite");
}

double Velocity3::speed() const { return std::sqrt(v1 * v1 + v2 * v2 + v3 * v3); }

double Velocity3::transverse() const { return std::hypot(v1, v2); }

FourMomentum FourMomentum::from_velocity(double m, const Velocity3& v) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("rest mass must be positive, got " + std::to_string(m));
  }
  const double speed = v.speed();
  if (!(speed < 1.0)) {
    throw DomainError("speed must be below 1, got " + std::to_string(speed));
  }
  const double gamma = 1.0 / std::sqrt((1.0 - speed) * (1.0 + speed));
  return FourMomentum{m * gamma, m * gamma * v.v1, m * gamma * v.v2, m * gamma * v.v3, m};
}

double FourMomentum::transverse() const { return std::hypot(p1, p2); }

double FourMomentum::mass_shell_defect() const {
  return e * e - p1 * p1 - p2 * p2 - p3 * p3 - m * m;
}

bool FourMomentum::on_shell() const {
  return std::abs(mass_shell_defect()) < 1e-12 * std::max(1.0, m * m);
}

double rapidity_from_speed(double v) {
  if (!(v >= 0.0) || !(v < 1.0)) {
    throw DomainError("speed must lie in [0, 1), got " + std::to_string(v));
  }
  return std::atanh(v);
}

VelocityAngles angles_from_velocity(const Velocity3& v) {
  const double speed = v.speed();
  VelocityAngles out;
  out.t_theta = rapidity_from_speed(speed);
  if (speed == 0.0) {
    out.indeterminate = true;
    return out;
  }
  const double vs = v.transverse();
  out.t_phi = std::atan2(vs, v.v3);
  if (vs > 0.0) out.azimuth = Complex(v.v1 / vs, v.v2 / vs);
  return out;
}

TimeAngleCoord coord_from_velocity(const Velocity3& v, double t) {
  const VelocityAngles a = angles_from_velocity(v);
  return TimeAngleCoord(t, a.t_theta, a.t_phi);
}

HyperbolicPoint embed_point(const TimeAngleCoord& c) {
  const double sh = std::sinh(c.t_theta());
  return HyperbolicPoint{0.5 * (1.0 + std::cosh(c.t_theta())),
                         0.5 * sh * std::cos(c.t_phi()),
                         0.5 * sh * std::sin(c.t_phi())};
}

double hyperbolic_constraint_residual(Complex z1, Complex z2) {
  return std::norm(z1) - std::norm(z2) - 1.0;
}

std::array<Complex, 2> reduced_coordinates(const TimeAngleCoord& c) {
  const double half = 0.5 * c.t_theta();
  return {Complex(std::cosh(half), 0.0), std::sinh(half) * std::polar(1.0, c.t_phi())};
}

Vec3 unit_time_vector(const TimeAngleCoord& c) {
  const double sh = std::sinh(c.t_theta());
  return {std::cosh(c.t_theta()), sh * std::cos(c.t_phi()), sh * std::sin(c.t_phi())};
}

double minkowski_dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2];
}

}  // namespace tritime

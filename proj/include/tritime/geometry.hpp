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
#include <numbers>

namespace tritime {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Wraps an angle into [0, 2 pi).
double normalize_angle(double angle);

/// A point in three-dimensional time: clock radius, hyperbolic angle
/// (rapidity) and circular time angle.
class TimeAngleCoord {
 public:
  TimeAngleCoord() = default;
  /// Throws DomainError for negative or non-finite t / t_theta.
  TimeAngleCoord(double t, double t_theta, double t_phi);

  double t() const { return t_; }
  double t_theta() const { return t_theta_; }
  double t_phi() const { return t_phi_; }

 private:
  double t_ = 0.0;
  double t_theta_ = 0.0;
  double t_phi_ = 0.0;
};

/// Particle velocity in units of c.
struct Velocity3 {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;

  double speed() const;
  /// Radial component in the x1-x2 plane, sqrt(v1^2 + v2^2).
  double transverse() const;
};

/// On-shell (E, p1, p2, p3) with rest mass m.
struct FourMomentum {
  double e = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  double m = 0.0;

  /// E = m gamma, p = m gamma v. Throws DomainError for m <= 0 or speed >= 1.
  static FourMomentum from_velocity(double m, const Velocity3& v);

  double transverse() const;
  /// E^2 - |p|^2 - m^2.
  double mass_shell_defect() const;
  bool on_shell() const;
};

/// Embedding coordinates (x0, x3, s) of a time-sphere point.
struct HyperbolicPoint {
  double x0 = 0.0;
  double x3 = 0.0;
  double s = 0.0;
};

/// Throws DomainError unless 0 <= v < 1.
double rapidity_from_speed(double v);

struct VelocityAngles {
  double t_theta = 0.0;
  /// In [0, pi]; the s axis is radial in the x1-x2 plane.
  double t_phi = 0.0;
  /// Unit phase of v1 + i v2 (1 when the transverse velocity vanishes).
  Complex azimuth{1.0, 0.0};
  /// Set for v = 0, where t_phi is canonicalized to 0.
  bool indeterminate = false;
};

/// cos t_phi = v3 / |v|, sin t_phi = sqrt(v1^2 + v2^2) / |v|.
VelocityAngles angles_from_velocity(const Velocity3& v);

/// Time angles of a particle's kinematics at clock time t.
TimeAngleCoord coord_from_velocity(const Velocity3& v, double t = 0.0);

/// x0 = (1 + cosh t_theta) / 2, x3 = sinh t_theta cos t_phi / 2,
/// s = sinh t_theta sin t_phi / 2.
HyperbolicPoint embed_point(const TimeAngleCoord& c);

/// |z1|^2 - |z2|^2 - 1.
double hyperbolic_constraint_residual(Complex z1, Complex z2);

/// Reduced stereographic pair (cosh(t_theta/2), sinh(t_theta/2) e^{i t_phi}).
std::array<Complex, 2> reduced_coordinates(const TimeAngleCoord& c);

/// Unit time vector in the (x0, x3, s) basis:
///   n0 = cosh t_theta, n3 = sinh t_theta cos t_phi, ns = sinh t_theta sin t_phi.
/// The printed relations label two components as the x3 projection; the
/// component paired with cosh t_theta is the x0 projection.
Vec3 unit_time_vector(const TimeAngleCoord& c);

/// a0 b0 - a3 b3 - as bs for two contravariant (x0, x3, s) vectors.
double minkowski_dot(const Vec3& a, const Vec3& b);

}  // namespace tritime

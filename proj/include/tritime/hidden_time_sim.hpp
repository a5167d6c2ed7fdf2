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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tritime/geometry.hpp"

namespace tritime {

/// Half-open interval [start, end) of the time-angle circle.
struct Arc {
  double start = 0.0;
  double end = 0.0;
  std::string label;
  /// Attribute carried by the arc (energy, position, detector bin, ...).
  std::optional<double> payload;

  double length() const { return end - start; }
};

/// Labeled, pairwise-disjoint arcs on [0, 2 pi). Uncovered angles are misses.
class AngularDistribution {
 public:
  AngularDistribution() = default;
  /// Sorts by start. Throws DomainError for arcs outside [0, 2 pi], empty
  /// arcs, or overlaps above 1e-12.
  explicit AngularDistribution(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  std::set<std::string> labels() const;
  double total_length() const;
  /// Index of the arc containing the angle, if any.
  std::optional<std::size_t> locate(double angle) const;

 private:
  std::vector<Arc> arcs_;
};

using LabelSet = std::set<std::string>;

/// Summed arc length of the label over 2 pi; 0 for unknown labels.
double outcome_probability(const AngularDistribution& d, const std::string& label);
/// 1 - sum of label probabilities.
double miss_probability(const AngularDistribution& d);

/// Deletes arcs outside `kept` and re-inflates the survivors to the full
/// circle: laid out contiguously from angle 0 in their original order, each
/// scaled by 2 pi / kept length. Throws DomainError when nothing of positive
/// measure survives.
AngularDistribution collapse(const AngularDistribution& d, const LabelSet& kept);

struct MeasurementRecord {
  /// Empty on a miss.
  std::optional<std::string> outcome;
  double angle_drawn = 0.0;
  AngularDistribution posterior;

  bool missed() const { return !outcome.has_value(); }
};

/// One uniform angle draw. A hit on an apparatus label collapses onto that
/// label; a miss leaves the distribution unchanged.
MeasurementRecord sample_measurement(const AngularDistribution& d, const LabelSet& apparatus,
                                     std::uint64_t seed);

struct FrequencyTable {
  std::uint64_t n = 0;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t misses = 0;

  double frequency(const std::string& label) const;
  double miss_frequency() const;
};

/// Draws are made in fixed blocks; block b uses stream_seed(seed, b). The
/// table depends only on (d, n, seed), whatever the partition count.
inline constexpr std::uint64_t kSampleBlock = 65536;

/// n uniform angle draws, tallied by label. `partitions` worker threads.
FrequencyTable empirical_frequencies(const AngularDistribution& d, std::uint64_t n,
                                     std::uint64_t seed, unsigned partitions = 1);

/// 4 sqrt(p (1 - p) / n).
double binomial_bound(double p, std::uint64_t n);
/// |freq - p| < bound; a zero-probability outcome passes only with freq == 0.
bool within_binomial_bound(double freq, double p, std::uint64_t n);

// --- two-slit toy experiment -------------------------------------------------

/// A slit occupies one arc of the time-angle circle. The arc is cut into
/// bins.size() equal sub-arcs; sub-arc j reaches detector bin bins[j].
struct SlitSpec {
  std::string label;
  double start = 0.0;
  double end = 0.0;
  bool open = true;
  std::vector<int> bins;
};

struct TwoSlitConfig {
  int detector_bins = 0;
  std::vector<SlitSpec> slits;

  /// Nine bins, two mirrored quarter-circle slits.
  static TwoSlitConfig standard();
  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Arcs labeled by detector bin ("0", "1", ...), payload = bin index.
AngularDistribution detector_distribution(const TwoSlitConfig& config);

struct BinStat {
  int bin = 0;
  double analytic_p = 0.0;
  double mc_freq = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct TwoSlitResult {
  std::uint64_t n = 0;
  std::vector<BinStat> bins;
  double analytic_miss = 0.0;
  double mc_miss = 0.0;

  bool all_pass() const;
};

TwoSlitResult two_slit_experiment(const TwoSlitConfig& config, std::uint64_t n,
                                  std::uint64_t seed, unsigned partitions = 1);

// --- extreme cases -----------------------------------------------------------

enum class ExtremeMode { PositionConfined, FixedMomentum };

/// One time angle with the velocity of its fiber.
struct Fiber {
  double angle = 0.0;
  Velocity3 velocity;
};

struct ExtremeCaseInput {
  ExtremeMode mode = ExtremeMode::PositionConfined;
  /// PositionConfined: common start position and the fibers leaving it.
  Vec3 origin{};
  std::vector<Fiber> fibers;
  /// FixedMomentum: the single velocity and the occupied sites.
  Velocity3 velocity;
  std::vector<Vec3> sites;
  double dt = 0.0;
};

struct ExtremeCaseResult {
  std::vector<Vec3> positions;
  /// angles[i] is the time angle found at positions[i].
  std::vector<double> angles;
  double diameter = 0.0;
};

/// PositionConfined: every fiber moves to origin + v dt, so the cloud spreads.
/// FixedMomentum: site i carries the single angle 2 pi i / N, all shifted by
/// v dt. Throws DomainError for dt < 0, superluminal velocities or empty input.
ExtremeCaseResult evolve_extreme_cases(const ExtremeCaseInput& input);

/// Largest pairwise Euclidean distance.
double diameter(std::span<const Vec3> points);

// --- mutual invisibility -----------------------------------------------------

struct HiddenParticle {
  Vec3 position{};
  TimeAngleCoord time_angle;

  double clock_time() const { return time_angle.t(); }
};

/// True iff clock time, position, t_theta and t_phi (circular distance) all
/// agree within tol.
bool visible(const HiddenParticle& a, const HiddenParticle& b, double tol);

/// True iff no distinct pair is mutually visible.
bool condensate_check(std::span<const HiddenParticle> particles, double tol);

}  // namespace tritime

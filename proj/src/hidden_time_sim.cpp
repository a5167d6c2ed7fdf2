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

#include "tritime/hidden_time_sim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "tritime/errors.hpp"
#include "tritime/random.hpp"

namespace tritime {
namespace {

constexpr double kOverlapTol = 1e-12;

std::string arc_text(const Arc& a) {
  std::ostringstream os;
  os << "'" << a.label << "' [" << a.start << ", " << a.end << ")";
  return os.str();
}

double circular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

}  // namespace

AngularDistribution::AngularDistribution(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end(),
            [](const Arc& a, const Arc& b) { return a.start < b.start; });
  for (const auto& a : arcs_) {
    if (!std::isfinite(a.start) || !std::isfinite(a.end) || a.start < 0.0 ||
        a.end > kTwoPi + kOverlapTol) {
      throw DomainError("arc " + arc_text(a) + " leaves [0, 2 pi)");
    }
    if (!(a.end > a.start)) throw DomainError("arc " + arc_text(a) + " has no length");
  }
  for (std::size_t i = 0; i + 1 < arcs_.size(); ++i) {
    if (arcs_[i].end - arcs_[i + 1].start > kOverlapTol) {
      throw DomainError("arcs " + arc_text(arcs_[i]) + " and " + arc_text(arcs_[i + 1]) +
                        " overlap");
    }
  }
}

std::set<std::string> AngularDistribution::labels() const {
  std::set<std::string> out;
  for (const auto& a : arcs_) out.insert(a.label);
  return out;
}

double AngularDistribution::total_length() const {
  double total = 0.0;
  for (const auto& a : arcs_) total += a.length();
  return total;
}

std::optional<std::size_t> AngularDistribution::locate(double angle) const {
  auto it = std::upper_bound(arcs_.begin(), arcs_.end(), angle,
                             [](double x, const Arc& a) { return x < a.start; });
  if (it == arcs_.begin()) return std::nullopt;
  --it;
  if (angle < it->end) return static_cast<std::size_t>(it - arcs_.begin());
  return std::nullopt;
}

double outcome_probability(const AngularDistribution& d, const std::string& label) {
  double total = 0.0;
  for (const auto& a : d.arcs()) {
    if (a.label == label) total += a.length();
  }
  return total / kTwoPi;
}

double miss_probability(const AngularDistribution& d) {
  double covered = 0.0;
  for (const auto& label : d.labels()) covered += outcome_probability(d, label);
  return 1.0 - covered;
}

AngularDistribution collapse(const AngularDistribution& d, const LabelSet& kept) {
  std::vector<Arc> survivors;
  double kept_length = 0.0;
  for (const auto& a : d.arcs()) {
    if (kept.contains(a.label)) {
      survivors.push_back(a);
      kept_length += a.length();
    }
  }
  if (!(kept_length > 0.0)) {
    throw DomainError("collapse onto a zero-measure set of time angles");
  }
  const double scale = kTwoPi / kept_length;
  double cursor = 0.0;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const double len = survivors[i].length() * scale;
    survivors[i].start = cursor;
    cursor += len;
    survivors[i].end = i + 1 == survivors.size() ? kTwoPi : cursor;
  }
  return AngularDistribution(std::move(survivors));
}

MeasurementRecord sample_measurement(const AngularDistribution& d, const LabelSet& apparatus,
                                     std::uint64_t seed) {
  Rng rng(seed);
  MeasurementRecord rec;
  rec.angle_drawn = kTwoPi * rng.uniform01();
  const auto hit = d.locate(rec.angle_drawn);
  if (hit && apparatus.contains(d.arcs()[*hit].label)) {
    rec.outcome = d.arcs()[*hit].label;
    rec.posterior = collapse(d, {*rec.outcome});
  } else {
    rec.posterior = d;
  }
  return rec;
}

double FrequencyTable::frequency(const std::string& label) const {
  auto it = counts.find(label);
  if (it == counts.end() || n == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(n);
}

double FrequencyTable::miss_frequency() const {
  return n == 0 ? 0.0 : static_cast<double>(misses) / static_cast<double>(n);
}

FrequencyTable empirical_frequencies(const AngularDistribution& d, std::uint64_t n,
                                     std::uint64_t seed, unsigned partitions) {
  if (n == 0) throw DomainError("sample count must be at least 1");
  partitions = std::max(1u, partitions);
  const std::uint64_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
  const std::size_t slots = d.arcs().size() + 1;  // last slot counts misses

  std::vector<std::vector<std::uint64_t>> partial(partitions,
                                                  std::vector<std::uint64_t>(slots, 0));
  auto work = [&](unsigned worker) {
    auto& tally = partial[worker];
    for (std::uint64_t b = worker; b < blocks; b += partitions) {
      Rng rng(stream_seed(seed, b));
      const std::uint64_t count = std::min(kSampleBlock, n - b * kSampleBlock);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto hit = d.locate(kTwoPi * rng.uniform01());
        ++tally[hit ? *hit : slots - 1];
      }
    }
  };
  if (partitions == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(partitions);
    for (unsigned w = 0; w < partitions; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  FrequencyTable table;
  table.n = n;
  for (const auto& label : d.labels()) table.counts[label] = 0;
  for (const auto& tally : partial) {
    for (std::size_t i = 0; i + 1 < slots; ++i) table.counts[d.arcs()[i].label] += tally[i];
    table.misses += tally[slots - 1];
  }
  return table;
}

double binomial_bound(double p, std::uint64_t n) {
  return 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

bool within_binomial_bound(double freq, double p, std::uint64_t n) {
  if (p <= 0.0) return freq == 0.0;
  if (p >= 1.0) return freq == 1.0;
  return std::abs(freq - p) < binomial_bound(p, n);
}

TwoSlitConfig TwoSlitConfig::standard() {
  constexpr double pi = std::numbers::pi;
  TwoSlitConfig c;
  c.detector_bins = 9;
  c.slits.push_back({"SlitL", 0.25 * pi, 0.75 * pi, true, {0, 1, 2, 3, 4, 5, 6, 7}});
  c.slits.push_back({"SlitR", 1.25 * pi, 1.75 * pi, true, {8, 7, 6, 5, 4, 3, 2, 1}});
  return c;
}

void TwoSlitConfig::validate() const {
  if (detector_bins < 1) throw ConfigError("detector_bins: must be at least 1");
  for (std::size_t i = 0; i < slits.size(); ++i) {
    const auto& s = slits[i];
    const std::string field = "slits[" + std::to_string(i) + "]";
    if (!std::isfinite(s.start) || s.start < 0.0 || s.start >= kTwoPi) {
      throw ConfigError(field + ".start: must lie in [0, 2 pi)");
    }
    if (!std::isfinite(s.end) || s.end > kTwoPi) {
      throw ConfigError(field + ".end: must not exceed 2 pi");
    }
    if (!(s.end > s.start)) throw ConfigError(field + ".end: slit arc has zero measure");
    if (s.bins.empty()) throw ConfigError(field + ".bins: path map is empty");
    for (int b : s.bins) {
      if (b < 0 || b >= detector_bins) {
        throw ConfigError(field + ".bins: bin " + std::to_string(b) + " outside 0.." +
                          std::to_string(detector_bins - 1));
      }
    }
    for (std::size_t j = 0; j < i; ++j) {
      const auto& o = slits[j];
      if (std::min(s.end, o.end) - std::max(s.start, o.start) > kOverlapTol) {
        throw ConfigError(field + ": arc overlaps slits[" + std::to_string(j) + "]");
      }
    }
  }
}

AngularDistribution detector_distribution(const TwoSlitConfig& config) {
  config.validate();
  std::vector<Arc> arcs;
  for (const auto& s : config.slits) {
    if (!s.open) continue;
    const double width = (s.end - s.start) / static_cast<double>(s.bins.size());
    for (std::size_t j = 0; j < s.bins.size(); ++j) {
      const double lo = s.start + width * static_cast<double>(j);
      const double hi = j + 1 == s.bins.size() ? s.end : lo + width;
      arcs.push_back({lo, hi, std::to_string(s.bins[j]), static_cast<double>(s.bins[j])});
    }
  }
  return AngularDistribution(std::move(arcs));
}

bool TwoSlitResult::all_pass() const {
  return std::all_of(bins.begin(), bins.end(), [](const BinStat& b) { return b.pass; });
}

TwoSlitResult two_slit_experiment(const TwoSlitConfig& config, std::uint64_t n,
                                  std::uint64_t seed, unsigned partitions) {
  const AngularDistribution d = detector_distribution(config);
  const FrequencyTable table = empirical_frequencies(d, n, seed, partitions);
  TwoSlitResult out;
  out.n = n;
  for (int b = 0; b < config.detector_bins; ++b) {
    const std::string label = std::to_string(b);
    BinStat stat;
    stat.bin = b;
    stat.analytic_p = outcome_probability(d, label);
    stat.mc_freq = table.frequency(label);
    stat.bound = binomial_bound(stat.analytic_p, n);
    stat.pass = within_binomial_bound(stat.mc_freq, stat.analytic_p, n);
    out.bins.push_back(stat);
  }
  out.analytic_miss = miss_probability(d);
  out.mc_miss = table.miss_frequency();
  return out;
}

double diameter(std::span<const Vec3> points) {
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dx = points[i][0] - points[j][0];
      const double dy = points[i][1] - points[j][1];
      const double dz = points[i][2] - points[j][2];
      worst = std::max(worst, std::sqrt(dx * dx + dy * dy + dz * dz));
    }
  return worst;
}

ExtremeCaseResult evolve_extreme_cases(const ExtremeCaseInput& input) {
  if (!(input.dt >= 0.0)) throw DomainError("elapsed time must be non-negative");
  auto shifted = [&](const Vec3& x, const Velocity3& v) {
    if (!(v.speed() < 1.0)) throw DomainError("fiber velocity must be below 1");
    return Vec3{x[0] + v.v1 * input.dt, x[1] + v.v2 * input.dt, x[2] + v.v3 * input.dt};
  };
  ExtremeCaseResult out;
  if (input.mode == ExtremeMode::PositionConfined) {
    if (input.fibers.empty()) throw DomainError("position-confined case needs fibers");
    for (const auto& f : input.fibers) {
      out.positions.push_back(shifted(input.origin, f.velocity));
      out.angles.push_back(normalize_angle(f.angle));
    }
  } else {
    if (input.sites.empty()) throw DomainError("fixed-momentum case needs sites");
    const auto count = static_cast<double>(input.sites.size());
    for (std::size_t i = 0; i < input.sites.size(); ++i) {
      out.positions.push_back(shifted(input.sites[i], input.velocity));
      out.angles.push_back(kTwoPi * static_cast<double>(i) / count);
    }
  }
  out.diameter = diameter(out.positions);
  return out;
}

bool visible(const HiddenParticle& a, const HiddenParticle& b, double tol) {
  if (std::abs(a.clock_time() - b.clock_time()) > tol) return false;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(a.position[k] - b.position[k]) > tol) return false;
  }
  if (std::abs(a.time_angle.t_theta() - b.time_angle.t_theta()) > tol) return false;
  return circular_distance(a.time_angle.t_phi(), b.time_angle.t_phi()) <= tol;
}

bool condensate_check(std::span<const HiddenParticle> particles, double tol) {
  for (std::size_t i = 0; i < particles.size(); ++i)
    for (std::size_t j = i + 1; j < particles.size(); ++j) {
      if (visible(particles[i], particles[j], tol)) return false;
    }
  return true;
}

}  // namespace tritime

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
#include <numbers>

#include "gtest/gtest.h"
#include "tritime/errors.hpp"
#include "tritime/random.hpp"

using namespace tritime;

namespace {

constexpr double kPi = std::numbers::pi;

AngularDistribution random_distribution(Rng& rng, int arcs, int labels) {
  // Sorted cut points; alternate arcs are kept so gaps (misses) appear.
  std::vector<double> cuts;
  for (int i = 0; i < 2 * arcs; ++i) cuts.push_back(rng.uniform(0, kTwoPi));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Arc> out;
  for (int i = 0; i + 1 < static_cast<int>(cuts.size()); i += 2) {
    if (cuts[i + 1] <= cuts[i]) continue;
    out.push_back({cuts[i], cuts[i + 1],
                   "L" + std::to_string(static_cast<int>(rng.uniform01() * labels)), std::nullopt});
  }
  return AngularDistribution(out);
}

}  // namespace

TEST(Distribution, validation) {
  EXPECT_THROW(AngularDistribution({{1.0, 1.0, "A", {}}}), DomainError);
  EXPECT_THROW(AngularDistribution({{-0.1, 1.0, "A", {}}}), DomainError);
  EXPECT_THROW(AngularDistribution({{0.0, 7.0, "A", {}}}), DomainError);
  EXPECT_THROW(AngularDistribution({{0.0, 2.0, "A", {}}, {1.0, 3.0, "B", {}}}), DomainError);
  EXPECT_NO_THROW(AngularDistribution({{0.0, 2.0, "A", {}}, {2.0, 3.0, "B", {}}}));
  EXPECT_NO_THROW(AngularDistribution({{0.0, kTwoPi, "A", {}}}));
}

TEST(Distribution, locate) {
  const AngularDistribution d({{2.0, 2.5, "B", {}}, {0.0, 1.0, "A", 3.5}});
  EXPECT_EQ(d.arcs()[0].label, "A");
  EXPECT_EQ(d.arcs()[0].payload, 3.5);
  EXPECT_EQ(d.locate(0.0), 0u);
  EXPECT_EQ(d.locate(0.999), 0u);
  EXPECT_EQ(d.locate(1.0), std::nullopt);
  EXPECT_EQ(d.locate(2.2), 1u);
  EXPECT_EQ(d.locate(6.0), std::nullopt);
}

TEST(Probability, examples) {
  EXPECT_NEAR(outcome_probability(AngularDistribution({{0, kPi, "A", {}}}), "A"), 0.5, 1e-15);
  const AngularDistribution slits({{0, kPi / 2, "SlitL", {}}, {kPi, 1.5 * kPi, "SlitR", {}}});
  EXPECT_NEAR(outcome_probability(slits, "SlitL"), 0.25, 1e-15);
  EXPECT_NEAR(outcome_probability(slits, "SlitR"), 0.25, 1e-15);
  const AngularDistribution two({{0, 1, "A", {}}, {2, 2.5, "A", {}}});
  EXPECT_NEAR(outcome_probability(two, "A"), 0.238732414637843, 1e-15);
  EXPECT_EQ(outcome_probability(two, "nope"), 0.0);
}

TEST(Probability, labels_plus_miss_sum_to_one) {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_distribution(rng, 1 + static_cast<int>(rng.uniform01() * 8), 3);
    double total = miss_probability(d);
    for (const auto& l : d.labels()) total += outcome_probability(d, l);
    EXPECT_NEAR(total, 1.0, 1e-15);
  }
}

TEST(Collapse, examples) {
  const AngularDistribution ab({{0, kPi, "A", {}}, {kPi, kTwoPi, "B", {}}});
  const auto a = collapse(ab, {"A"});
  EXPECT_NEAR(outcome_probability(a, "A"), 1.0, 1e-15);
  EXPECT_EQ(a.labels(), LabelSet{"A"});

  const AngularDistribution abc(
      {{0, kPi / 2, "A", {}}, {kPi / 2, kPi, "B", {}}, {kPi, kTwoPi, "C", {}}});
  const auto kept = collapse(abc, {"A", "B"});
  EXPECT_NEAR(outcome_probability(kept, "A"), 0.5, 1e-15);
  EXPECT_NEAR(outcome_probability(kept, "B"), 0.5, 1e-15);

  const auto all = collapse(abc, {"A", "B", "C"});
  for (const auto& l : abc.labels()) {
    EXPECT_NEAR(outcome_probability(all, l), outcome_probability(abc, l), 1e-15);
  }
}

TEST(Collapse, zero_measure_is_an_error) {
  const AngularDistribution ab({{0, kPi, "A", {}}});
  EXPECT_THROW(collapse(ab, {"B"}), DomainError);
  EXPECT_THROW(collapse(ab, {}), DomainError);
}

TEST(Collapse, idempotent_and_ratio_preserving) {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_distribution(rng, 2 + static_cast<int>(rng.uniform01() * 8), 4);
    const auto labels = d.labels();
    LabelSet kept;
    for (const auto& l : labels) {
      if (rng.uniform01() < 0.6) kept.insert(l);
    }
    if (kept.empty()) kept.insert(*labels.begin());
    const auto once = collapse(d, kept);
    const auto twice = collapse(once, kept);
    EXPECT_NEAR(miss_probability(once), 0.0, 1e-12);
    ASSERT_EQ(once.arcs().size(), twice.arcs().size());
    for (std::size_t k = 0; k < once.arcs().size(); ++k) {
      EXPECT_NEAR(once.arcs()[k].start, twice.arcs()[k].start, 1e-12);
      EXPECT_NEAR(once.arcs()[k].end, twice.arcs()[k].end, 1e-12);
    }
    const std::string& ref = *kept.begin();
    for (const auto& l : kept) {
      const double before = outcome_probability(d, l) / outcome_probability(d, ref);
      const double after = outcome_probability(once, l) / outcome_probability(once, ref);
      EXPECT_NEAR(before, after, 1e-12 * std::max(1.0, before));
    }
  }
}

TEST(Measurement, certain_hit_and_certain_miss) {
  const AngularDistribution full({{0, kTwoPi, "A", {}}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto hit = sample_measurement(full, {"A"}, seed);
    EXPECT_EQ(hit.outcome, "A");
    const auto miss = sample_measurement(full, {}, seed);
    EXPECT_TRUE(miss.missed());
    EXPECT_EQ(miss.posterior.arcs().size(), 1u);
  }
}

TEST(Measurement, hit_lies_in_arc_and_collapses) {
  const AngularDistribution d({{0, 1, "A", {}}, {2, 4, "B", {}}, {5, 6, "A", {}}});
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto rec = sample_measurement(d, {"A", "B"}, seed);
    if (rec.missed()) {
      EXPECT_FALSE(d.locate(rec.angle_drawn).has_value());
      EXPECT_EQ(rec.posterior.arcs().size(), d.arcs().size());
      continue;
    }
    const auto idx = d.locate(rec.angle_drawn);
    ASSERT_TRUE(idx.has_value());
    EXPECT_EQ(d.arcs()[*idx].label, *rec.outcome);
    EXPECT_EQ(rec.posterior.labels(), LabelSet{*rec.outcome});
    EXPECT_NEAR(outcome_probability(rec.posterior, *rec.outcome), 1.0, 1e-12);
  }
}

TEST(Measurement, deterministic_per_seed) {
  const AngularDistribution d({{0, 1, "A", {}}, {2, 4, "B", {}}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(sample_measurement(d, {"A"}, seed).angle_drawn,
              sample_measurement(d, {"A"}, seed).angle_drawn);
  }
}

TEST(Measurement, half_circle_frequency_over_a_million_seeds) {
  const AngularDistribution d({{0, kPi, "A", {}}});
  std::uint64_t hits = 0;
  const std::uint64_t n = 1000000;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    if (!sample_measurement(d, {"A"}, seed).missed()) ++hits;
  }
  EXPECT_NEAR(static_cast<double>(hits) / n, 0.5, 0.002);
}

TEST(Measurement, conditional_outcomes_follow_renormalized_fractions) {
  // Apparatus sees A and B only; C is never registered.
  const AngularDistribution d({{0, 1, "A", {}}, {1, 3, "B", {}}, {3, 3.5, "C", {}}});
  const std::uint64_t n = 100000;
  std::map<std::string, double> observed;
  double hits = 0;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    const auto rec = sample_measurement(d, {"A", "B"}, seed);
    if (!rec.missed()) {
      observed[*rec.outcome] += 1;
      hits += 1;
    }
  }
  const double pa = 1.0 / 3.0;
  const double pb = 2.0 / 3.0;
  const double chi2 = std::pow(observed["A"] - hits * pa, 2) / (hits * pa) +
                      std::pow(observed["B"] - hits * pb, 2) / (hits * pb);
  EXPECT_LT(chi2, 10.83);  // 1 dof, p = 0.001
}

TEST(Frequencies, binomial_bound_and_determinism) {
  const AngularDistribution d({{0, kPi / 2, "A", {}}});
  const std::uint64_t n = 1000000;
  const auto t = empirical_frequencies(d, n, 99);
  EXPECT_LT(std::abs(t.frequency("A") - 0.25), 4 * std::sqrt(0.25 * 0.75 / n));
  const auto again = empirical_frequencies(d, n, 99);
  EXPECT_EQ(t.counts, again.counts);
  EXPECT_EQ(t.misses, again.misses);
  const auto single = empirical_frequencies(d, 1, 5);
  EXPECT_TRUE(single.frequency("A") == 0.0 || single.frequency("A") == 1.0);
  EXPECT_THROW(empirical_frequencies(d, 0, 5), DomainError);
}

TEST(Frequencies, independent_of_partition_count) {
  const AngularDistribution d({{0, 1, "A", {}}, {2, 4, "B", {}}});
  const auto base = empirical_frequencies(d, 300001, 17, 1);
  for (unsigned p : {2u, 3u, 8u}) {
    const auto t = empirical_frequencies(d, 300001, 17, p);
    EXPECT_EQ(t.counts, base.counts) << p;
    EXPECT_EQ(t.misses, base.misses) << p;
  }
}

TEST(Frequencies, converge_for_most_seeds) {
  const AngularDistribution d({{0, 1, "A", {}}, {2, 4, "B", {}}, {4.5, 4.6, "C", {}}});
  const std::uint64_t n = 100000;
  for (const auto& label : d.labels()) {
    const double p = outcome_probability(d, label);
    int inside = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto t = empirical_frequencies(d, n, seed);
      if (std::abs(t.frequency(label) - p) < binomial_bound(p, n)) ++inside;
    }
    EXPECT_GE(inside, 99) << label;
  }
}

TEST(TwoSlit, standard_config_is_symmetric) {
  const TwoSlitConfig c = TwoSlitConfig::standard();
  const auto d = detector_distribution(c);
  const int bins = c.detector_bins;
  for (int b = 0; b < bins; ++b) {
    EXPECT_NEAR(outcome_probability(d, std::to_string(b)),
                outcome_probability(d, std::to_string(bins - 1 - b)), 1e-15);
  }
  EXPECT_NEAR(miss_probability(d), 0.5, 1e-15);
}

TEST(TwoSlit, single_slit_images) {
  TwoSlitConfig c = TwoSlitConfig::standard();
  c.slits[1].open = false;
  const auto r = two_slit_experiment(c, 100000, 3);
  double on_image = 0.0;
  for (const auto& b : r.bins) {
    const bool image = std::find(c.slits[0].bins.begin(), c.slits[0].bins.end(), b.bin) !=
                       c.slits[0].bins.end();
    if (!image) {
      EXPECT_EQ(b.analytic_p, 0.0);
      EXPECT_EQ(b.mc_freq, 0.0);
    }
    on_image += b.analytic_p;
  }
  EXPECT_NEAR(on_image, 0.25, 1e-15);
  EXPECT_TRUE(r.all_pass());
}

TEST(TwoSlit, monte_carlo_within_binomial_bounds) {
  const auto r = two_slit_experiment(TwoSlitConfig::standard(), 1000000, 2024, 4);
  double total_p = r.analytic_miss;
  double total_f = r.mc_miss;
  for (const auto& b : r.bins) {
    EXPECT_TRUE(b.pass) << b.bin;
    total_p += b.analytic_p;
    total_f += b.mc_freq;
  }
  EXPECT_NEAR(total_p, 1.0, 1e-14);
  EXPECT_NEAR(total_f, 1.0, 1e-14);
}

TEST(TwoSlit, config_errors) {
  TwoSlitConfig overlap = TwoSlitConfig::standard();
  overlap.slits[1].start = overlap.slits[0].start + 0.1;
  overlap.slits[1].end = overlap.slits[0].end + 0.1;
  EXPECT_THROW(overlap.validate(), ConfigError);
  TwoSlitConfig empty = TwoSlitConfig::standard();
  empty.slits[0].end = empty.slits[0].start;
  EXPECT_THROW(empty.validate(), ConfigError);
  TwoSlitConfig badbin = TwoSlitConfig::standard();
  badbin.slits[0].bins.push_back(99);
  EXPECT_THROW(badbin.validate(), ConfigError);
}

TEST(ExtremeCases, position_confined_spreads) {
  ExtremeCaseInput in;
  in.origin = {1.0, 2.0, 3.0};
  in.fibers = {{0.0, {0.5, 0, 0}}, {kPi, {-0.5, 0, 0}}};
  in.dt = 0.0;
  EXPECT_EQ(evolve_extreme_cases(in).diameter, 0.0);
  in.dt = 2.0;
  const auto r = evolve_extreme_cases(in);
  EXPECT_NEAR(r.positions[0][0], 2.0, 1e-15);
  EXPECT_NEAR(r.positions[1][0], 0.0, 1e-15);
  EXPECT_NEAR(r.diameter, 2.0, 1e-15);

  Rng rng(43);
  in.fibers.clear();
  for (int i = 0; i < 20; ++i) {
    in.fibers.push_back({rng.uniform(0, kTwoPi),
                         {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)}});
  }
  double previous = -1.0;
  for (double dt : {0.0, 0.5, 1.0, 2.0, 10.0}) {
    in.dt = dt;
    const double diam = evolve_extreme_cases(in).diameter;
    EXPECT_GE(diam, previous);
    previous = diam;
  }
  in.dt = -1.0;
  EXPECT_THROW(evolve_extreme_cases(in), DomainError);
}

TEST(ExtremeCases, fixed_momentum_assigns_one_angle_per_site) {
  ExtremeCaseInput in;
  in.mode = ExtremeMode::FixedMomentum;
  in.velocity = {0.3, 0, 0};
  for (int i = 0; i < 12; ++i) in.sites.push_back({static_cast<double>(i), 0, 0});
  in.dt = 1.0;
  const auto r = evolve_extreme_cases(in);
  ASSERT_EQ(r.angles.size(), 12u);
  auto sorted = r.angles;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  EXPECT_NEAR(r.positions[0][0], 0.3, 1e-15);
  EXPECT_NEAR(r.diameter, 11.0, 1e-12);
}

TEST(Visibility, predicate) {
  const HiddenParticle a{{0, 0, 0}, TimeAngleCoord(1.0, 0.5, 0.2)};
  EXPECT_TRUE(visible(a, a, 1e-9));
  const HiddenParticle rotated{{0, 0, 0}, TimeAngleCoord(1.0, 0.5, 0.2 + kPi)};
  EXPECT_FALSE(visible(a, rotated, 1e-9));
  const HiddenParticle moved{{0, 0, 1}, TimeAngleCoord(1.0, 0.5, 0.2)};
  EXPECT_FALSE(visible(a, moved, 1e-9));
  const HiddenParticle later{{0, 0, 0}, TimeAngleCoord(2.0, 0.5, 0.2)};
  EXPECT_FALSE(visible(a, later, 1e-9));
  // Circular comparison across 0.
  const HiddenParticle near_zero{{0, 0, 0}, TimeAngleCoord(1.0, 0.5, 1e-12)};
  const HiddenParticle near_two_pi{{0, 0, 0}, TimeAngleCoord(1.0, 0.5, kTwoPi - 1e-12)};
  EXPECT_TRUE(visible(near_zero, near_two_pi, 1e-9));
  EXPECT_EQ(visible(a, rotated, 1e-9), visible(rotated, a, 1e-9));
}

TEST(Visibility, condensate) {
  const int n = 16;
  std::vector<HiddenParticle> spread;
  for (int i = 0; i < n; ++i) {
    spread.push_back({{1, 1, 1}, TimeAngleCoord(3.0, 0.7, kTwoPi * i / n)});
  }
  EXPECT_TRUE(condensate_check(spread, 1e-9));
  std::vector<HiddenParticle> twins{spread[0], spread[0]};
  EXPECT_FALSE(condensate_check(twins, 1e-9));

  Rng rng(44);
  std::vector<HiddenParticle> many;
  for (int i = 0; i < 100; ++i) {
    many.push_back({{0, 0, 0}, TimeAngleCoord(1.0, rng.uniform(0, 2), rng.uniform(0, kTwoPi))});
  }
  bool any_pair = false;
  for (int i = 0; i < 100; ++i)
    for (int j = i + 1; j < 100; ++j) any_pair |= visible(many[i], many[j], 1e-9);
  EXPECT_EQ(condensate_check(many, 1e-9), !any_pair);
  EXPECT_TRUE(condensate_check(many, 1e-9));
  std::reverse(many.begin(), many.end());
  EXPECT_TRUE(condensate_check(many, 1e-9));
}

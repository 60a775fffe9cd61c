// Copyright 2026 The fairrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairrank/constraint_noise.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fairrank/metrics.h"
#include "test_support.h"

namespace fairrank {
namespace {

using Scheme = NoiseSpec::Scheme;

TEST(NoiseSpecTest, SchemeNamesRoundTrip) {
  for (Scheme s : {Scheme::kIpfWeights, Scheme::kDcsMinCounts, Scheme::kIlpBounds}) {
    EXPECT_EQ(parse_scheme(scheme_name(s)), s);
  }
  EXPECT_EQ(scheme_name(Scheme::kIlpBounds), "ilp-bounds");
  EXPECT_THROW(parse_scheme("gaussian"), std::invalid_argument);
  EXPECT_THROW((NoiseSpec{-1.0, 0, Scheme::kIlpBounds}.validate()),
               std::invalid_argument);
}

TEST(ConstraintNoiseTest, ZeroSigmaIsIdentity) {
  CostMatrix w(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) w(r, c) = 0.1 * static_cast<double>(r + c);
  }
  const CostMatrix out = perturb_ipf_weights(w, {0.0, 9, Scheme::kIpfWeights});
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(out(r, c), w(r, c));
  }
  const std::vector<double> counts = {1.5, 2.0};
  EXPECT_EQ(perturb_min_counts(counts, {0.0, 9, Scheme::kDcsMinCounts}), counts);
  EXPECT_EQ(perturb_ilp_bounds(1.0, 3.0, {0.0, 9, Scheme::kIlpBounds}),
            std::make_pair(1.0, 3.0));
}

TEST(ConstraintNoiseTest, SeededReproducibility) {
  const NoiseSpec spec{1.0, 123, Scheme::kDcsMinCounts};
  const std::vector<double> counts(10, 2.0);
  EXPECT_EQ(perturb_min_counts(counts, spec), perturb_min_counts(counts, spec));
  EXPECT_NE(perturb_min_counts(counts, spec),
            perturb_min_counts(counts, {1.0, 124, Scheme::kDcsMinCounts}));
}

TEST(ConstraintNoiseTest, SchemeMismatchThrows) {
  ConstraintNoise noise({1.0, 1, Scheme::kIpfWeights});
  std::vector<double> counts = {1.0};
  EXPECT_THROW(noise.perturb_min_counts(counts), std::invalid_argument);
  EXPECT_THROW(noise.perturb_ilp_bounds(0.0, 1.0), std::invalid_argument);
}

TEST(ConstraintNoiseTest, WeightNoiseIsCenteredWithUnitSpread) {
  CostMatrix w(100, 5.0);
  const CostMatrix out = perturb_ipf_weights(w, {1.0, 4, Scheme::kIpfWeights});
  double sum = 0, sq = 0;
  for (std::size_t r = 0; r < 100; ++r) {
    for (std::size_t c = 0; c < 100; ++c) {
      const double d = out(r, c) - 5.0;
      sum += d;
      sq += d * d;
    }
  }
  const double n = 10000.0;
  // Standard error of the mean is 0.01.
  EXPECT_NEAR(sum / n, 0.0, 0.05);
  EXPECT_NEAR(std::sqrt(sq / n), 1.0, 0.05);
}

TEST(ConstraintNoiseTest, IlpBoundsOnlyRelax) {
  ConstraintNoise noise({1.0, 8, Scheme::kIlpBounds});
  double widening = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto [lo, hi] = noise.perturb_ilp_bounds(2.0, 4.0);
    EXPECT_LE(lo, 2.0);
    EXPECT_GE(hi, 4.0);
    widening += (2.0 - lo) + (hi - 4.0);
  }
  // E|N(0, 1)| = sqrt(2 / pi).
  EXPECT_NEAR(widening / 20000.0, std::sqrt(2.0 / M_PI), 0.03);
}

TEST(ConstraintNoiseTest, ZeroSigmaRankersAreBitExact) {
  Rng rng = make_stream(41, {});
  const auto inst = testing::random_instance(16, 3, rng);
  const FairnessSpec spec = FairnessSpec::proportional(inst.groups);

  ConstraintNoise ilp({0.0, 3, Scheme::kIlpBounds});
  PrefixBounds bounds = PrefixBounds::from_spec(spec, 16);
  ilp.perturb_ilp_bounds(bounds);
  EXPECT_EQ(exact_fair_dcg(inst.set, inst.groups, bounds).ranking,
            exact_fair_dcg(inst.set, inst.groups, spec).ranking);

  ConstraintNoise dcs({0.0, 3, Scheme::kDcsMinCounts});
  DetConstSortOptions options;
  options.min_counts = noisy_min_counts(spec, dcs);
  EXPECT_EQ(det_const_sort(inst.set, inst.groups, spec, options).ranking,
            det_const_sort(inst.set, inst.groups, spec).ranking);

  ConstraintNoise ipf({0.0, 3, Scheme::kIpfWeights});
  const Ranking input = ranking_from_scores(inst.set);
  EXPECT_EQ(approx_multi_valued_ipf(input, inst.groups, spec,
                                    ipf_weight_noise(ipf))
                .ranking,
            approx_multi_valued_ipf(input, inst.groups, spec).ranking);
}

TEST(ConstraintNoiseTest, PerturbedIlpStaysFeasible) {
  Rng rng = make_stream(42, {});
  const auto inst = testing::random_instance(12, 3, rng);
  const FairnessSpec spec = FairnessSpec::proportional(inst.groups);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ConstraintNoise noise({1.0, seed, Scheme::kIlpBounds});
    PrefixBounds bounds = PrefixBounds::from_spec(spec, 12);
    noise.perturb_ilp_bounds(bounds);
    EXPECT_NO_THROW(exact_fair_dcg(inst.set, inst.groups, bounds));
  }
}

TEST(ConstraintNoiseTest, NoisyMinCountsDrawPerPrefix) {
  const FairnessSpec spec = FairnessSpec::make({0.5, 0.5}, {0.5, 0.5});
  ConstraintNoise noise({0.5, 5, Scheme::kDcsMinCounts});
  const MinCountProvider mins = noisy_min_counts(spec, noise);
  const auto base = default_min_counts(spec);
  const auto first = mins(4);
  EXPECT_EQ(first.size(), 2u);
  EXPECT_NE(first, base(4));
}

}  // namespace
}  // namespace fairrank

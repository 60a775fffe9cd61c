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

#include "fairrank/prefix_bounds.h"

#include <gtest/gtest.h>

#include <vector>

#include "oracle.h"
#include "test_support.h"

namespace fairrank {
namespace {

TEST(PrefixBoundsTest, VacuousByDefault) {
  const PrefixBounds b(2, 4);
  EXPECT_EQ(b.lower(0, 3), 0.0);
  EXPECT_EQ(b.upper(1, 3), 3.0);
  const std::vector<std::size_t> counts = {3, 0};
  EXPECT_TRUE(b.admits(counts, 3));
}

TEST(PrefixBoundsTest, FromSpecAppliesQuotasFromK) {
  const FairnessSpec spec = FairnessSpec::make({0.5, 0.5}, {0.5, 0.5}, 3);
  const PrefixBounds b = PrefixBounds::from_spec(spec, 6);
  EXPECT_EQ(b.lower(0, 2), 0.0);
  EXPECT_EQ(b.upper(0, 2), 2.0);
  EXPECT_EQ(b.lower(0, 3), 1.0);
  EXPECT_EQ(b.upper(0, 3), 2.0);
  EXPECT_EQ(b.lower(1, 6), 3.0);
  EXPECT_EQ(b.upper(1, 6), 3.0);
}

TEST(PrefixBoundsTest, RealBoundsCompareAgainstIntegers) {
  PrefixBounds b(1, 5);
  b.set_lower(0, 4, 2.3);
  b.set_upper(0, 4, 3.7);
  EXPECT_FALSE(b.admits(std::vector<std::size_t>{2}, 4));
  EXPECT_TRUE(b.admits(std::vector<std::size_t>{3}, 4));
  EXPECT_FALSE(b.admits(std::vector<std::size_t>{4}, 4));
}

TEST(FairScheduleTest, ReleaseAndDeadline) {
  const GroupAssignment g = testing::halves(4);
  const PrefixBounds b =
      PrefixBounds::from_spec(FairnessSpec::make({0.5, 0.5}, {0.5, 0.5}), 4);
  const FairSchedule s(b, g.group_sizes());
  // Upper ceil(l/2) admits a 2nd member at prefix 3; lower floor(l/2)
  // requires it by prefix 4.
  EXPECT_EQ(s.release(0, 1), 1u);
  EXPECT_EQ(s.release(0, 2), 3u);
  EXPECT_EQ(s.deadline(0, 1), 2u);
  EXPECT_EQ(s.deadline(0, 2), 4u);
  EXPECT_TRUE(s.feasible(std::vector<std::size_t>{0, 0}));
  EXPECT_TRUE(s.feasible(std::vector<std::size_t>{1, 1}));
}

TEST(FairScheduleTest, DetectsFirstFailure) {
  // Group 0 has 3 of 4 members but may hold at most half of each prefix.
  const GroupAssignment g("g", {"a", "b"}, {0, 0, 0, 1});
  const PrefixBounds b =
      PrefixBounds::from_spec(FairnessSpec::make({0.5, 0.5}, {0.25, 0.25}), 4);
  const FairSchedule s(b, g.group_sizes());
  EXPECT_FALSE(s.feasible(std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(s.first_failure(std::vector<std::size_t>{0, 0}), 4u);
}

TEST(FairScheduleTest, RejectsSizeMismatch) {
  const PrefixBounds b(2, 5);
  EXPECT_THROW(FairSchedule(b, std::vector<std::size_t>{2, 2}),
               std::invalid_argument);
}

// The schedule's verdict for the empty state is "a fair ranking exists",
// which the oracle decides by counting.
TEST(FairScheduleTest, FeasibilityAgreesWithCounting) {
  Rng rng = make_stream(11, {});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto inst = testing::random_instance(7, 2 + trial % 2, rng);
    const std::size_t g = inst.groups.num_groups();
    FairnessSpec spec = FairnessSpec::unconstrained(g);
    for (std::size_t p = 0; p < g; ++p) {
      spec.beta[p] = 0.6 * unit(rng);
      spec.alpha[p] = std::min(1.0, spec.beta[p] + 0.5 * unit(rng));
    }
    double lo = 0, hi = 0;
    for (std::size_t p = 0; p < spec.num_groups(); ++p) {
      lo += spec.beta[p];
      hi += spec.alpha[p];
    }
    if (lo > 1.0 || hi < 1.0) continue;
    const PrefixBounds b = PrefixBounds::from_spec(spec, 7);
    const FairSchedule s(b, inst.groups.group_sizes());
    const std::vector<std::size_t> zero(inst.groups.num_groups(), 0);
    const bool exists = oracle::count_fair_rankings(inst.groups, spec) > 0;
    EXPECT_EQ(s.feasible(zero), exists);
    infeasible += !exists;
  }
  EXPECT_GT(infeasible, 0);
}

}  // namespace
}  // namespace fairrank

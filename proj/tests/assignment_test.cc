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

#include "fairrank/assignment.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "fairrank/random.h"

namespace fairrank {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double brute_force(const CostMatrix& m, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double c = 0;
    for (std::size_t r = 0; r < n; ++r) c += m(r, perm[r]);
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TEST(AssignmentTest, SmallHandCase) {
  CostMatrix m(3);
  const double costs[3][3] = {{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = costs[r][c];
  }
  const auto a = min_cost_assignment(m);
  ASSERT_TRUE(a.has_value());
  double total = 0;
  for (std::size_t r = 0; r < 3; ++r) total += m(r, (*a)[r]);
  EXPECT_EQ(total, 5.0);
}

TEST(AssignmentTest, MatchesBruteForceWithForbiddenCells) {
  Rng rng = make_stream(7, {});
  std::uniform_real_distribution<double> unit(0.0, 10.0);
  std::bernoulli_distribution forbid(0.3);
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    CostMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = forbid(rng) ? kInf : unit(rng);
    }
    const double expected = brute_force(m, n);
    const auto a = min_cost_assignment(m);
    if (expected == kInf) {
      EXPECT_FALSE(a.has_value());
      ++infeasible;
      continue;
    }
    ASSERT_TRUE(a.has_value());
    std::vector<bool> used(n, false);
    double total = 0;
    for (std::size_t r = 0; r < n; ++r) {
      ASSERT_FALSE(used[(*a)[r]]);
      used[(*a)[r]] = true;
      total += m(r, (*a)[r]);
    }
    EXPECT_NEAR(total, expected, 1e-9);
  }
  EXPECT_GT(infeasible, 0);
}

}  // namespace
}  // namespace fairrank

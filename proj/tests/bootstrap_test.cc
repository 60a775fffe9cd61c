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

#include "fairrank/bootstrap.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "fairrank/random.h"

namespace fairrank {
namespace {

TEST(SummaryTest, MeanMedianSd) {
  const std::vector<double> v = {4.0, 1.0, 3.0, 2.0};
  EXPECT_DOUBLE_EQ(mean(v), 2.5);
  EXPECT_DOUBLE_EQ(median(v), 2.5);
  EXPECT_DOUBLE_EQ(median(std::vector<double>{5.0, 1.0, 3.0}), 3.0);
  EXPECT_NEAR(standard_deviation(v), 1.2909944487358056, 1e-15);
  EXPECT_EQ(standard_deviation(std::vector<double>{7.0}), 0.0);
  EXPECT_EQ(statistic_name(Statistic::kMedian), "median");
  EXPECT_THROW(mean(std::vector<double>{}), std::invalid_argument);
}

TEST(BootstrapTest, ConstantSampleHasDegenerateInterval) {
  const std::vector<double> v(30, 7.0);
  const BootstrapCI ci = bootstrap_ci(v, Statistic::kMean, 200, 1);
  EXPECT_EQ(ci.point, 7.0);
  EXPECT_EQ(ci.lower, 7.0);
  EXPECT_EQ(ci.upper, 7.0);
  EXPECT_EQ(ci.resamples, 200u);
}

TEST(BootstrapTest, SeededRerunIsIdentical) {
  const std::vector<double> v = {1, 5, 2, 8, 3, 9, 4};
  const BootstrapCI a = bootstrap_ci(v, Statistic::kMedian, 500, 11);
  const BootstrapCI b = bootstrap_ci(v, Statistic::kMedian, 500, 11);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_LE(a.lower, a.point);
  EXPECT_GE(a.upper, a.point);
}

TEST(BootstrapTest, RejectsEmptyInput) {
  EXPECT_THROW(bootstrap_ci(std::vector<double>{}, Statistic::kMean, 10, 1),
               std::invalid_argument);
}

// Percentile intervals for the mean of U(0,1), n = 1000, should cover 0.5
// about 95% of the time. With 500 replications the binomial standard error
// is about 1%, so 0.91..0.99 is a generous band.
TEST(BootstrapTest, CoverageOfUniformMean) {
  int covered = 0;
  const int replications = 500;
  for (int rep = 0; rep < replications; ++rep) {
    Rng rng = make_stream(2024, {static_cast<std::uint64_t>(rep)});
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(1000);
    for (double& x : v) x = unit(rng);
    const BootstrapCI ci = bootstrap_ci(v, Statistic::kMean, 1000,
                                        static_cast<std::uint64_t>(rep) + 1);
    covered += ci.lower <= 0.5 && 0.5 <= ci.upper;
  }
  const double rate = static_cast<double>(covered) / replications;
  EXPECT_GT(rate, 0.91);
  EXPECT_LT(rate, 0.99);
}

}  // namespace
}  // namespace fairrank

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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fairrank/random.h"

namespace fairrank {
namespace {

// Linear interpolation between order statistics of sorted data.
double quantile_sorted(const std::vector<double>& sorted, double q) {
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::string statistic_name(Statistic statistic) {
  return statistic == Statistic::kMean ? "mean" : "median";
}

double mean(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("mean of no values");
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of no values");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  const double lower = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lower + upper);
}

double standard_deviation(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double compute(Statistic statistic, std::span<const double> values) {
  return statistic == Statistic::kMean ? mean(values) : median(values);
}

BootstrapCI bootstrap_ci(std::span<const double> values, Statistic statistic,
                         std::size_t resamples, std::uint64_t seed) {
  if (values.empty()) throw std::invalid_argument("bootstrap of no values");
  if (resamples == 0) throw std::invalid_argument("need at least 1 resample");
  BootstrapCI ci;
  ci.point = compute(statistic, values);
  ci.resamples = resamples;
  Rng rng = make_stream(seed, {});
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<double> draw(values.size());
  std::vector<double> stats;
  stats.reserve(resamples);
  for (std::size_t r = 0; r < resamples; ++r) {
    for (double& d : draw) d = values[pick(rng)];
    stats.push_back(compute(statistic, draw));
  }
  std::sort(stats.begin(), stats.end());
  ci.lower = std::min(quantile_sorted(stats, 0.025), ci.point);
  ci.upper = std::max(quantile_sorted(stats, 0.975), ci.point);
  return ci;
}

}  // namespace fairrank

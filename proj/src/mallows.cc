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

#include "fairrank/mallows.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fairrank/metrics.h"

namespace fairrank {
namespace {

// exp(-theta r), with the r = 0 term pinned to 1 so that theta = inf works.
double insertion_weight(double theta, std::size_t r) {
  if (r == 0) return 1.0;
  return std::exp(-theta * static_cast<double>(r));
}

// log sum_{r=0..j-1} exp(-theta r)
double log_level_sum(std::size_t j, double theta) {
  if (theta == 0.0) return std::log(static_cast<double>(j));
  double sum = 0.0;
  for (std::size_t r = 0; r < j; ++r) sum += insertion_weight(theta, r);
  return std::log(sum);
}

}  // namespace

void MallowsParams::validate() const {
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("Mallows dispersion must be >= 0");
  }
}

double log_normalization_constant(std::size_t k, double theta) {
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("Mallows dispersion must be >= 0");
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= k; ++j) total += log_level_sum(j, theta);
  return total;
}

double normalization_constant(std::size_t k, double theta) {
  return std::exp(log_normalization_constant(k, theta));
}

double log_pmf(const Ranking& ranking, const MallowsParams& params) {
  params.validate();
  const std::size_t d = kendall_tau(ranking, params.center);
  const double log_z = log_normalization_constant(ranking.size(), params.theta);
  if (d == 0) return -log_z;
  return -params.theta * static_cast<double>(d) - log_z;
}

double pmf(const Ranking& ranking, const MallowsParams& params) {
  return std::exp(log_pmf(ranking, params));
}

Ranking sample(const MallowsParams& params, Rng& rng) {
  params.validate();
  const std::size_t k = params.center.size();
  std::vector<std::size_t> order;
  order.reserve(k);
  std::vector<double> weights;
  weights.reserve(k);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t j = 1; j <= k; ++j) {
    if (weights.size() < j) weights.push_back(insertion_weight(params.theta, j - 1));
    double total = 0.0;
    for (std::size_t r = 0; r < j; ++r) total += weights[r];
    double u = unit(rng) * total;
    std::size_t r = 0;
    while (r + 1 < j && u >= weights[r]) {
      u -= weights[r];
      ++r;
    }
    const std::size_t slot = (j - 1) - r;
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(slot),
                 params.center.at(j));
  }
  return Ranking(std::move(order), params.center.universe());
}

}  // namespace fairrank

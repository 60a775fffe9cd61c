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

#ifndef FAIRRANK_BOOTSTRAP_H_
#define FAIRRANK_BOOTSTRAP_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace fairrank {

enum class Statistic { kMean, kMedian };

std::string statistic_name(Statistic statistic);

double mean(std::span<const double> values);
double median(std::span<const double> values);
// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double standard_deviation(std::span<const double> values);
double compute(Statistic statistic, std::span<const double> values);

struct BootstrapCI {
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t resamples = 0;
};

// Percentile bootstrap (2.5% / 97.5%) of the statistic. The interval is
// widened to contain the point estimate if needed. Throws
// std::invalid_argument on empty input.
BootstrapCI bootstrap_ci(std::span<const double> values, Statistic statistic,
                         std::size_t resamples, std::uint64_t seed);

}  // namespace fairrank

#endif  // FAIRRANK_BOOTSTRAP_H_

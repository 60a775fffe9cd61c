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

#ifndef FAIRRANK_MALLOWS_H_
#define FAIRRANK_MALLOWS_H_

#include <cstddef>

#include "fairrank/random.h"
#include "fairrank/ranking.h"

namespace fairrank {

// Mallows model under the Kendall tau distance. `theta` may be +infinity,
// in which case all mass sits on the center.
struct MallowsParams {
  Ranking center;
  double theta = 0.0;

  // Throws std::invalid_argument if theta is negative or NaN.
  void validate() const;
};

// Z_k(theta) = prod_{j=1..k} sum_{r=0..j-1} exp(-theta r).
double normalization_constant(std::size_t k, double theta);
double log_normalization_constant(std::size_t k, double theta);

double pmf(const Ranking& ranking, const MallowsParams& params);
double log_pmf(const Ranking& ranking, const MallowsParams& params);

// Repeated-insertion sampler: the center's items are inserted one at a time;
// the j-th lands r slots above the bottom with probability proportional to
// exp(-theta r), r in [0, j). O(k^2) per draw.
Ranking sample(const MallowsParams& params, Rng& rng);

}  // namespace fairrank

#endif  // FAIRRANK_MALLOWS_H_

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

#ifndef FAIRRANK_CONSTRAINT_NOISE_H_
#define FAIRRANK_CONSTRAINT_NOISE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fairrank/assignment.h"
#include "fairrank/fair_rankers.h"
#include "fairrank/prefix_bounds.h"
#include "fairrank/random.h"

namespace fairrank {

// Gaussian noise in a ranker's constraint arithmetic, simulating imperfect
// knowledge of group membership.
struct NoiseSpec {
  enum class Scheme { kIpfWeights, kDcsMinCounts, kIlpBounds };

  double sigma = 0.0;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::kIpfWeights;

  void validate() const;
};

std::string scheme_name(NoiseSpec::Scheme scheme);
NoiseSpec::Scheme parse_scheme(const std::string& name);

// Stateful draw source for one NoiseSpec. Each perturb call consumes fresh
// draws; sigma == 0 leaves its input untouched and draws nothing. Calling a
// method that does not match the scheme throws std::invalid_argument.
class ConstraintNoise {
 public:
  explicit ConstraintNoise(const NoiseSpec& spec);

  // w += N(0, sigma) for every cell.
  void perturb_ipf_weights(CostMatrix& weights);
  // c += N(0, sigma) for every entry.
  void perturb_min_counts(std::vector<double>& counts);
  // lower -= |N(0, sigma)|, upper += |N(0, sigma)|, independent draws.
  std::pair<double, double> perturb_ilp_bounds(double lower, double upper);
  // One draw per (group, prefix, side).
  void perturb_ilp_bounds(PrefixBounds& bounds);

  const NoiseSpec& spec() const { return spec_; }

 private:
  void require(NoiseSpec::Scheme scheme) const;
  double draw();

  NoiseSpec spec_;
  Rng rng_;
  std::normal_distribution<double> normal_;
};

// One-shot forms.
CostMatrix perturb_ipf_weights(CostMatrix weights, const NoiseSpec& noise);
std::vector<double> perturb_min_counts(std::vector<double> counts,
                                       const NoiseSpec& noise);
std::pair<double, double> perturb_ilp_bounds(double lower, double upper,
                                             const NoiseSpec& noise);

// Ranker hooks drawing from a shared ConstraintNoise. The noise object must
// outlive the returned callable.
WeightTransform ipf_weight_noise(ConstraintNoise& noise);
MinCountProvider noisy_min_counts(const FairnessSpec& spec,
                                  ConstraintNoise& noise);

}  // namespace fairrank

#endif  // FAIRRANK_CONSTRAINT_NOISE_H_

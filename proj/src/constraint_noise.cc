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

#include <cmath>
#include <stdexcept>

namespace fairrank {

void NoiseSpec::validate() const {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("noise sigma must be finite and >= 0");
  }
}

std::string scheme_name(NoiseSpec::Scheme scheme) {
  switch (scheme) {
    case NoiseSpec::Scheme::kIpfWeights:
      return "ipf-weights";
    case NoiseSpec::Scheme::kDcsMinCounts:
      return "dcs-mincounts";
    case NoiseSpec::Scheme::kIlpBounds:
      return "ilp-bounds";
  }
  return "unknown";
}

NoiseSpec::Scheme parse_scheme(const std::string& name) {
  if (name == "ipf-weights") return NoiseSpec::Scheme::kIpfWeights;
  if (name == "dcs-mincounts") return NoiseSpec::Scheme::kDcsMinCounts;
  if (name == "ilp-bounds") return NoiseSpec::Scheme::kIlpBounds;
  throw std::invalid_argument("unknown noise scheme '" + name + "'");
}

ConstraintNoise::ConstraintNoise(const NoiseSpec& spec)
    : spec_(spec),
      rng_(make_stream(spec.seed, {static_cast<std::uint64_t>(spec.scheme)})),
      normal_(0.0, spec.sigma > 0.0 ? spec.sigma : 1.0) {
  spec_.validate();
}

void ConstraintNoise::require(NoiseSpec::Scheme scheme) const {
  if (spec_.scheme != scheme) {
    throw std::invalid_argument("noise scheme is " + scheme_name(spec_.scheme) +
                                ", not " + scheme_name(scheme));
  }
}

double ConstraintNoise::draw() { return normal_(rng_); }

void ConstraintNoise::perturb_ipf_weights(CostMatrix& weights) {
  require(NoiseSpec::Scheme::kIpfWeights);
  if (spec_.sigma == 0.0) return;
  for (std::size_t r = 0; r < weights.size(); ++r) {
    for (std::size_t c = 0; c < weights.size(); ++c) weights(r, c) += draw();
  }
}

void ConstraintNoise::perturb_min_counts(std::vector<double>& counts) {
  require(NoiseSpec::Scheme::kDcsMinCounts);
  if (spec_.sigma == 0.0) return;
  for (double& c : counts) c += draw();
}

std::pair<double, double> ConstraintNoise::perturb_ilp_bounds(double lower,
                                                              double upper) {
  require(NoiseSpec::Scheme::kIlpBounds);
  if (spec_.sigma == 0.0) return {lower, upper};
  const double x = std::fabs(draw());
  const double y = std::fabs(draw());
  return {lower - x, upper + y};
}

void ConstraintNoise::perturb_ilp_bounds(PrefixBounds& bounds) {
  require(NoiseSpec::Scheme::kIlpBounds);
  if (spec_.sigma == 0.0) return;
  for (std::size_t l = 1; l <= bounds.length(); ++l) {
    for (std::size_t p = 0; p < bounds.num_groups(); ++p) {
      const auto [lo, hi] = perturb_ilp_bounds(bounds.lower(p, l),
                                               bounds.upper(p, l));
      bounds.set_lower(p, l, lo);
      bounds.set_upper(p, l, hi);
    }
  }
}

CostMatrix perturb_ipf_weights(CostMatrix weights, const NoiseSpec& noise) {
  ConstraintNoise source(noise);
  source.perturb_ipf_weights(weights);
  return weights;
}

std::vector<double> perturb_min_counts(std::vector<double> counts,
                                       const NoiseSpec& noise) {
  ConstraintNoise source(noise);
  source.perturb_min_counts(counts);
  return counts;
}

std::pair<double, double> perturb_ilp_bounds(double lower, double upper,
                                             const NoiseSpec& noise) {
  ConstraintNoise source(noise);
  return source.perturb_ilp_bounds(lower, upper);
}

WeightTransform ipf_weight_noise(ConstraintNoise& noise) {
  return [&noise](CostMatrix& weights) { noise.perturb_ipf_weights(weights); };
}

MinCountProvider noisy_min_counts(const FairnessSpec& spec,
                                  ConstraintNoise& noise) {
  MinCountProvider base = default_min_counts(spec);
  return [base, &noise](std::size_t prefix) {
    std::vector<double> counts = base(prefix);
    noise.perturb_min_counts(counts);
    return counts;
  };
}

}  // namespace fairrank

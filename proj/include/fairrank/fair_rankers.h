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

#ifndef FAIRRANK_FAIR_RANKERS_H_
#define FAIRRANK_FAIR_RANKERS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairrank/assignment.h"
#include "fairrank/prefix_bounds.h"
#include "fairrank/ranking.h"

namespace fairrank {

struct RankerOutput {
  Ranking ranking;
  // Metric name -> value, recomputable from `ranking` and the inputs.
  std::map<std::string, double> diagnostics;
};

// How noisy_ranking picks among its samples. Ties go to the earliest sample.
struct SelectionCriterion {
  enum class Kind { kMaxNdcg, kMinKendallTau, kMinInfeasibleIndex };

  Kind kind = Kind::kMaxNdcg;
  // Only for kMinInfeasibleIndex.
  std::optional<GroupAssignment> groups;
  std::optional<FairnessSpec> spec;

  static SelectionCriterion max_ndcg() { return {}; }
  static SelectionCriterion min_kendall_tau() {
    return {Kind::kMinKendallTau, std::nullopt, std::nullopt};
  }
  static SelectionCriterion min_infeasible_index(GroupAssignment groups,
                                                 FairnessSpec spec) {
    return {Kind::kMinInfeasibleIndex, std::move(groups), std::move(spec)};
  }

  std::string name() const;
  // Lower is better.
  double cost(const Ranking& candidate, const Ranking& center,
              const std::vector<double>& scores) const;
};

// Greedy fair ranking: position by position, the highest-scoring candidate
// whose placement still admits a fair completion. Every prefix of length
// >= spec.k is fair and each group appears in score order. Throws
// InfeasibleError naming the first failing prefix.
Ranking build_weakly_fair_center(const CandidateSet& set,
                                 const GroupAssignment& groups,
                                 const FairnessSpec& spec);

// Mallows-noise re-ranking: center = build_weakly_fair_center, then the
// criterion-best of `samples` draws from M(center, theta).
RankerOutput noisy_ranking(const CandidateSet& set,
                           const GroupAssignment& groups,
                           const FairnessSpec& spec, std::size_t samples,
                           const SelectionCriterion& criterion, double theta,
                           std::uint64_t seed);

// Same, around a caller-supplied center.
RankerOutput noisy_ranking_from_center(const CandidateSet& set,
                                       const Ranking& center,
                                       std::size_t samples,
                                       const SelectionCriterion& criterion,
                                       double theta, std::uint64_t seed);

// Maximum-DCG ranking among those satisfying every prefix bound, by dynamic
// programming over per-group count vectors. Throws InfeasibleError, or
// std::length_error when the state space exceeds `max_states`.
RankerOutput exact_fair_dcg(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const FairnessSpec& spec);
RankerOutput exact_fair_dcg(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const PrefixBounds& bounds,
                            std::size_t max_states = 20'000'000);

// tempMinCounts for a prefix length, one real value per group.
using MinCountProvider = std::function<std::vector<double>(std::size_t)>;

// floor(beta_p * prefix)
MinCountProvider default_min_counts(const FairnessSpec& spec);

enum class ExhaustionPolicy {
  kFail,  // a group below its minimum with no members left is an error
  kSkip,  // such a group is ignored
};

struct DetConstSortOptions {
  MinCountProvider min_counts;  // default_min_counts(spec) when empty
  ExhaustionPolicy exhaustion = ExhaustionPolicy::kFail;
};

// Greedy constrained sort. The provider is called once per prefix length,
// in increasing order, before any placement.
RankerOutput det_const_sort(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const FairnessSpec& spec,
                            const DetConstSortOptions& options = {});

// Hook applied to the displacement weights before matching.
using WeightTransform = std::function<void(CostMatrix&)>;

// Fair ranking closest to `input` in footrule distance that keeps each
// group's input order. Rows of the weight matrix are candidates in input
// order, columns are positions; cells outside a member's fair window are
// +infinity.
RankerOutput approx_multi_valued_ipf(const Ranking& input,
                                     const GroupAssignment& groups,
                                     const FairnessSpec& spec,
                                     const WeightTransform& perturb = {});

}  // namespace fairrank

#endif  // FAIRRANK_FAIR_RANKERS_H_

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

#ifndef FAIRRANK_METRICS_H_
#define FAIRRANK_METRICS_H_

#include <cstddef>
#include <span>

#include "fairrank/ranking.h"

namespace fairrank {

// Sum of squared position differences. Both rankings must rank the same
// candidates; throws std::invalid_argument otherwise.
double spearman_distance(const Ranking& a, const Ranking& b);

// Sum of absolute position differences (Spearman footrule).
double footrule_distance(const Ranking& a, const Ranking& b);

// Number of discordant candidate pairs, counted in O(k log k).
std::size_t kendall_tau(const Ranking& a, const Ranking& b);

// 1 - 4 d_KT / (k (k - 1)); requires k >= 2.
double kendall_tau_coefficient(const Ranking& a, const Ranking& b);

// Sum over positions i of score(at(i)) / ln(1 + i).
double dcg(const Ranking& ranking, std::span<const double> scores);

// DCG of the best possible ordering of length ranking.size() drawn from all
// of `scores`.
double ideal_dcg(std::size_t length, std::span<const double> scores);

// dcg / ideal_dcg. Throws UndefinedMetricError when the ideal DCG is zero.
double ndcg(const Ranking& ranking, std::span<const double> scores);

struct FairnessReport {
  std::size_t lower_violations = 0;
  std::size_t upper_violations = 0;
  std::size_t infeasible_index = 0;
  double ppfair = 100.0;
};

// Two-sided infeasible index over every prefix length 1..|ranking|. A
// prefix is charged once on each side on which some group is out of bounds.
FairnessReport infeasible_index(const Ranking& ranking,
                                const GroupAssignment& groups,
                                const FairnessSpec& spec);

// Percentage of prefix positions not charged by the infeasible index.
double ppfair(const Ranking& ranking, const GroupAssignment& groups,
              const FairnessSpec& spec);

// Every prefix of length >= spec.k is within bounds.
bool is_fair(const Ranking& ranking, const GroupAssignment& groups,
             const FairnessSpec& spec);

// The prefix of length exactly spec.k is within bounds.
bool is_weakly_fair(const Ranking& ranking, const GroupAssignment& groups,
                    const FairnessSpec& spec);

}  // namespace fairrank

#endif  // FAIRRANK_METRICS_H_

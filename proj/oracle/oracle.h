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

#ifndef FAIRRANK_ORACLE_ORACLE_H_
#define FAIRRANK_ORACLE_ORACLE_H_

// Exhaustive reference implementations. Factorial time; test use only.
// Nothing here calls into the library's metric or ranker code paths, so the
// results can serve as independent ground truth for them.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fairrank/mallows.h"
#include "fairrank/ranking.h"

namespace fairrank::oracle {

struct EnumerationBudget {
  std::size_t max_permutation_size = 8;
  std::size_t max_groups = 3;
};

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// O(k^2) pair scan.
std::size_t kendall_tau_pairs(const Ranking& a, const Ranking& b);

// Every prefix of length >= spec.k within floor(beta l)..ceil(alpha l).
bool prefix_fair(const std::vector<std::size_t>& order,
                 const GroupAssignment& groups, const FairnessSpec& spec);

// All fair complete rankings of the set, in lexicographic order.
std::vector<Ranking> enumerate_fair_rankings(const CandidateSet& set,
                                             const GroupAssignment& groups,
                                             const FairnessSpec& spec,
                                             const EnumerationBudget& budget = {});

// Counts fair rankings by recursing over group sequences and multiplying by
// the within-group arrangements, without enumerating permutations.
std::size_t count_fair_rankings(const GroupAssignment& groups,
                                const FairnessSpec& spec,
                                const EnumerationBudget& budget = {});

// Full Mallows pmf by enumeration of S_k; keys are complete orders.
std::map<std::vector<std::size_t>, double> exact_mallows_distribution(
    const MallowsParams& params, const EnumerationBudget& budget = {});

// Z_k(theta) summed over all k! permutations.
double enumerated_normalization_constant(std::size_t k, double theta,
                                         const EnumerationBudget& budget = {});

enum class Objective { kMaxDcg, kMinFootruleToInput };

struct Optimum {
  Ranking ranking;
  double value = 0.0;
};

// Exact optimum over enumerate_fair_rankings. kMinFootruleToInput needs
// `input`. Among equal values the ranking with the lexicographically
// smallest id sequence wins. Throws BudgetExceeded or std::runtime_error
// when no fair ranking exists.
Optimum brute_force_optimum(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const FairnessSpec& spec, Objective objective,
                            const EnumerationBudget& budget = {},
                            const std::optional<Ranking>& input = std::nullopt);

}  // namespace fairrank::oracle

#endif  // FAIRRANK_ORACLE_ORACLE_H_

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

#include "oracle.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace fairrank::oracle {
namespace {

void check_budget(std::size_t n, std::size_t groups,
                  const EnumerationBudget& budget) {
  if (n > budget.max_permutation_size) {
    throw BudgetExceeded("enumeration of " + std::to_string(n) +
                         " items exceeds budget of " +
                         std::to_string(budget.max_permutation_size));
  }
  if (groups > budget.max_groups) {
    throw BudgetExceeded("enumeration with " + std::to_string(groups) +
                         " groups exceeds budget of " +
                         std::to_string(budget.max_groups));
  }
}

bool within(std::size_t count, double beta, double alpha, std::size_t len) {
  const double l = static_cast<double>(len);
  const double lo = std::floor(beta * l + 1e-9);
  const double hi = std::ceil(alpha * l - 1e-9);
  const double c = static_cast<double>(count);
  return c >= lo && c <= hi;
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t count_sequences(std::vector<std::size_t>& counts,
                            const std::vector<std::size_t>& sizes,
                            std::size_t len, std::size_t n,
                            const FairnessSpec& spec) {
  if (len == n) return 1;
  std::size_t total = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (counts[p] == sizes[p]) continue;
    ++counts[p];
    bool ok = true;
    if (len + 1 >= spec.k) {
      for (std::size_t q = 0; q < sizes.size() && ok; ++q) {
        ok = within(counts[q], spec.beta[q], spec.alpha[q], len + 1);
      }
    }
    if (ok) total += count_sequences(counts, sizes, len + 1, n, spec);
    --counts[p];
  }
  return total;
}

std::vector<std::string> id_sequence(const Ranking& r, const CandidateSet& set) {
  std::vector<std::string> ids;
  for (std::size_t c : r.order()) ids.push_back(set[c].id);
  return ids;
}

}  // namespace

std::size_t kendall_tau_pairs(const Ranking& a, const Ranking& b) {
  std::size_t discordant = 0;
  const auto order = a.order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      // a ranks order[i] above order[j]; discordant if b disagrees.
      if (b.position_of(order[i]) > b.position_of(order[j])) ++discordant;
    }
  }
  return discordant;
}

bool prefix_fair(const std::vector<std::size_t>& order,
                 const GroupAssignment& groups, const FairnessSpec& spec) {
  for (std::size_t len = std::max<std::size_t>(spec.k, 1); len <= order.size();
       ++len) {
    for (std::size_t p = 0; p < groups.num_groups(); ++p) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < len; ++i) {
        if (groups.group_of(order[i]) == p) ++count;
      }
      if (!within(count, spec.beta[p], spec.alpha[p], len)) return false;
    }
  }
  return true;
}

std::vector<Ranking> enumerate_fair_rankings(const CandidateSet& set,
                                             const GroupAssignment& groups,
                                             const FairnessSpec& spec,
                                             const EnumerationBudget& budget) {
  check_budget(set.size(), groups.num_groups(), budget);
  std::vector<std::size_t> perm(set.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Ranking> out;
  do {
    if (prefix_fair(perm, groups, spec)) out.emplace_back(perm, set.size());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t count_fair_rankings(const GroupAssignment& groups,
                                const FairnessSpec& spec,
                                const EnumerationBudget& budget) {
  const std::size_t n = groups.num_candidates();
  check_budget(n, groups.num_groups(), budget);
  const auto sizes = groups.group_sizes();
  std::vector<std::size_t> counts(sizes.size(), 0);
  std::size_t arrangements = 1;
  for (std::size_t s : sizes) arrangements *= factorial(s);
  return count_sequences(counts, sizes, 0, n, spec) * arrangements;
}

std::map<std::vector<std::size_t>, double> exact_mallows_distribution(
    const MallowsParams& params, const EnumerationBudget& budget) {
  const std::size_t k = params.center.size();
  check_budget(k, 0, budget);
  std::vector<std::size_t> perm(params.center.order().begin(),
                                params.center.order().end());
  std::sort(perm.begin(), perm.end());
  std::map<std::vector<std::size_t>, double> weights;
  double z = 0.0;
  do {
    const Ranking r(perm, params.center.universe());
    const std::size_t d = kendall_tau_pairs(r, params.center);
    const double w = d == 0 ? 1.0 : std::exp(-params.theta * static_cast<double>(d));
    weights[perm] = w;
    z += w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto& [order, w] : weights) w /= z;
  return weights;
}

double enumerated_normalization_constant(std::size_t k, double theta,
                                         const EnumerationBudget& budget) {
  check_budget(k, 0, budget);
  const Ranking center = Ranking::identity(k);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  double z = 0.0;
  do {
    const std::size_t d = kendall_tau_pairs(Ranking(perm, k), center);
    z += d == 0 ? 1.0 : std::exp(-theta * static_cast<double>(d));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return z;
}

Optimum brute_force_optimum(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const FairnessSpec& spec, Objective objective,
                            const EnumerationBudget& budget,
                            const std::optional<Ranking>& input) {
  if (objective == Objective::kMinFootruleToInput && !input) {
    throw std::invalid_argument("footrule objective needs an input ranking");
  }
  const auto fair = enumerate_fair_rankings(set, groups, spec, budget);
  if (fair.empty()) throw std::runtime_error("no fair ranking exists");

  auto value_of = [&](const Ranking& r) {
    double v = 0.0;
    for (std::size_t pos = 1; pos <= r.size(); ++pos) {
      const std::size_t c = r.order()[pos - 1];
      if (objective == Objective::kMaxDcg) {
        v += set[c].score / std::log(1.0 + static_cast<double>(pos));
      } else {
        v += std::fabs(static_cast<double>(pos) -
                       static_cast<double>(input->position_of(c)));
      }
    }
    return objective == Objective::kMaxDcg ? v : -v;  // maximize
  };

  std::optional<Optimum> best;
  std::vector<std::string> best_ids;
  for (const Ranking& r : fair) {
    const double v = value_of(r);
    const double tol = 1e-12 * std::max(1.0, std::fabs(v));
    if (!best || v > best->value + tol) {
      best = Optimum{r, v};
      best_ids = id_sequence(r, set);
    } else if (std::fabs(v - best->value) <= tol) {
      auto ids = id_sequence(r, set);
      if (ids < best_ids) {
        best = Optimum{r, v};
        best_ids = std::move(ids);
      }
    }
  }
  if (objective == Objective::kMinFootruleToInput) best->value = -best->value;
  return *best;
}

}  // namespace fairrank::oracle

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

#include "fairrank/fair_rankers.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "fairrank/errors.h"
#include "fairrank/mallows.h"
#include "fairrank/metrics.h"
#include "fairrank/random.h"

namespace fairrank {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_inputs(std::size_t num_candidates, const GroupAssignment& groups,
                  const FairnessSpec& spec) {
  spec.validate();
  if (groups.num_candidates() != num_candidates) {
    throw std::invalid_argument("group assignment covers " +
                                std::to_string(groups.num_candidates()) +
                                " candidates, expected " +
                                std::to_string(num_candidates));
  }
  if (spec.num_groups() != groups.num_groups()) {
    throw std::invalid_argument("fairness spec and group assignment disagree "
                                "on the number of groups");
  }
}

// Members of each group, best score first.
std::vector<std::vector<std::size_t>> members_by_score(
    const CandidateSet& set, const GroupAssignment& groups) {
  std::vector<std::vector<std::size_t>> members(groups.num_groups());
  for (std::size_t i = 0; i < set.size(); ++i) {
    members[groups.group_of(i)].push_back(i);
  }
  for (auto& m : members) {
    std::sort(m.begin(), m.end(), [&](std::size_t a, std::size_t b) {
      return score_order_before(set[a], set[b]);
    });
  }
  return members;
}

std::string infeasible_message(std::size_t prefix) {
  return "no ranking satisfies the fairness constraints; they first fail at "
         "prefix " +
         std::to_string(prefix);
}

void add_quality(std::map<std::string, double>& out, const Ranking& ranking,
                 const std::vector<double>& scores) {
  out["dcg"] = dcg(ranking, scores);
  const double ideal = ideal_dcg(ranking.size(), scores);
  if (ideal > 0.0) out["ndcg"] = out["dcg"] / ideal;
}

void add_fairness(std::map<std::string, double>& out, const Ranking& ranking,
                  const GroupAssignment& groups, const FairnessSpec& spec) {
  const FairnessReport r = infeasible_index(ranking, groups, spec);
  const std::string tag = "[" + groups.attribute() + "]";
  out["infeasible_index" + tag] = static_cast<double>(r.infeasible_index);
  out["ppfair" + tag] = r.ppfair;
}

}  // namespace

std::string SelectionCriterion::name() const {
  switch (kind) {
    case Kind::kMaxNdcg:
      return "max-ndcg";
    case Kind::kMinKendallTau:
      return "min-kt";
    case Kind::kMinInfeasibleIndex:
      return "min-ii[" + (groups ? groups->attribute() : std::string()) + "]";
  }
  return "unknown";
}

double SelectionCriterion::cost(const Ranking& candidate, const Ranking& center,
                                const std::vector<double>& scores) const {
  switch (kind) {
    case Kind::kMaxNdcg:
      return -ndcg(candidate, scores);
    case Kind::kMinKendallTau:
      return static_cast<double>(kendall_tau(candidate, center));
    case Kind::kMinInfeasibleIndex:
      if (!groups || !spec) {
        throw std::invalid_argument(
            "infeasible-index criterion needs groups and a fairness spec");
      }
      return static_cast<double>(
          infeasible_index(candidate, *groups, *spec).infeasible_index);
  }
  return 0.0;
}

Ranking build_weakly_fair_center(const CandidateSet& set,
                                 const GroupAssignment& groups,
                                 const FairnessSpec& spec) {
  check_inputs(set.size(), groups, spec);
  const std::size_t n = set.size();
  const std::size_t g = groups.num_groups();
  const auto members = members_by_score(set, groups);
  const auto sizes = groups.group_sizes();
  const FairSchedule schedule(PrefixBounds::from_spec(spec, n), sizes);

  std::vector<std::size_t> counts(g, 0);
  if (const std::size_t f = schedule.first_failure(counts); f != 0) {
    throw InfeasibleError(infeasible_message(f), f);
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> by_next(g);
  for (std::size_t pos = 1; pos <= n; ++pos) {
    by_next.clear();
    for (std::size_t p = 0; p < g; ++p) {
      if (counts[p] < sizes[p]) by_next.push_back(p);
    }
    std::sort(by_next.begin(), by_next.end(), [&](std::size_t a, std::size_t b) {
      return score_order_before(set[members[a][counts[a]]],
                                set[members[b][counts[b]]]);
    });
    bool placed = false;
    for (std::size_t p : by_next) {
      ++counts[p];
      if (schedule.feasible(counts)) {
        order.push_back(members[p][counts[p] - 1]);
        placed = true;
        break;
      }
      --counts[p];
    }
    if (!placed) {
      throw InfeasibleError(infeasible_message(pos), pos);
    }
  }
  return Ranking(std::move(order), n);
}

RankerOutput noisy_ranking_from_center(const CandidateSet& set,
                                       const Ranking& center,
                                       std::size_t samples,
                                       const SelectionCriterion& criterion,
                                       double theta, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (center.universe() != set.size() || !center.complete()) {
    throw std::invalid_argument("center must rank every candidate");
  }
  const MallowsParams params{center, theta};
  params.validate();
  const std::vector<double> scores = set.scores();
  Rng rng = make_stream(seed, {});

  RankerOutput out;
  double best_cost = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    Ranking draw = sample(params, rng);
    if (samples == 1) {
      out.ranking = std::move(draw);
      break;
    }
    const double c = criterion.cost(draw, center, scores);
    if (i == 0 || c < best_cost) {
      best_cost = c;
      out.ranking = std::move(draw);
    }
  }
  add_quality(out.diagnostics, out.ranking, scores);
  out.diagnostics["kendall_tau_to_input"] =
      static_cast<double>(kendall_tau(out.ranking, center));
  out.diagnostics["samples"] = static_cast<double>(samples);
  return out;
}

RankerOutput noisy_ranking(const CandidateSet& set,
                           const GroupAssignment& groups,
                           const FairnessSpec& spec, std::size_t samples,
                           const SelectionCriterion& criterion, double theta,
                           std::uint64_t seed) {
  const Ranking center = build_weakly_fair_center(set, groups, spec);
  RankerOutput out =
      noisy_ranking_from_center(set, center, samples, criterion, theta, seed);
  add_fairness(out.diagnostics, out.ranking, groups, spec);
  return out;
}

RankerOutput exact_fair_dcg(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const PrefixBounds& bounds,
                            std::size_t max_states) {
  const std::size_t n = set.size();
  const std::size_t g = groups.num_groups();
  if (groups.num_candidates() != n || bounds.length() != n ||
      bounds.num_groups() != g) {
    throw std::invalid_argument("exact_fair_dcg: inconsistent input sizes");
  }
  if (g > 255) throw std::invalid_argument("too many groups");
  const auto members = members_by_score(set, groups);
  const auto sizes = groups.group_sizes();

  std::vector<std::size_t> stride(g, 1);
  std::size_t states = 1;
  for (std::size_t p = 0; p < g; ++p) {
    stride[p] = states;
    if (states > max_states / (sizes[p] + 1)) {
      throw std::length_error("exact_fair_dcg: state space exceeds " +
                              std::to_string(max_states));
    }
    states *= sizes[p] + 1;
  }

  // value[s]: best DCG of a bounds-respecting prefix with count vector s.
  std::vector<double> value(states, kNegInf);
  std::vector<std::uint8_t> parent(states, 0);
  value[0] = 0.0;
  std::vector<std::size_t> counts(g, 0);
  std::size_t length = 0;
  for (std::size_t s = 0; s < states; ++s) {
    if (s > 0) {
      // Odometer increment of the mixed-radix count vector.
      for (std::size_t p = 0; p < g; ++p) {
        if (counts[p] < sizes[p]) {
          ++counts[p];
          ++length;
          break;
        }
        length -= counts[p];
        counts[p] = 0;
      }
    }
    if (value[s] == kNegInf) continue;
    const double discount = 1.0 / std::log(static_cast<double>(length) + 2.0);
    for (std::size_t p = 0; p < g; ++p) {
      if (counts[p] == sizes[p]) continue;
      ++counts[p];
      if (bounds.admits(counts, length + 1)) {
        const double v = value[s] + set[members[p][counts[p] - 1]].score * discount;
        const std::size_t t = s + stride[p];
        if (v > value[t]) {
          value[t] = v;
          parent[t] = static_cast<std::uint8_t>(p);
        }
      }
      --counts[p];
    }
  }

  if (value[states - 1] == kNegInf) {
    const FairSchedule schedule(bounds, sizes);
    const std::size_t f = schedule.first_failure(std::vector<std::size_t>(g, 0));
    throw InfeasibleError(infeasible_message(f), f);
  }
  std::vector<std::size_t> order(n);
  std::size_t s = states - 1;
  counts = sizes;
  for (std::size_t pos = n; pos >= 1; --pos) {
    const std::size_t p = parent[s];
    order[pos - 1] = members[p][counts[p] - 1];
    --counts[p];
    s -= stride[p];
  }
  RankerOutput out{Ranking(std::move(order), n), {}};
  const std::vector<double> scores = set.scores();
  add_quality(out.diagnostics, out.ranking, scores);
  out.diagnostics["kendall_tau_to_input"] = static_cast<double>(
      kendall_tau(out.ranking, ranking_from_scores(set)));
  return out;
}

RankerOutput exact_fair_dcg(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const FairnessSpec& spec) {
  check_inputs(set.size(), groups, spec);
  RankerOutput out =
      exact_fair_dcg(set, groups, PrefixBounds::from_spec(spec, set.size()));
  add_fairness(out.diagnostics, out.ranking, groups, spec);
  return out;
}

MinCountProvider default_min_counts(const FairnessSpec& spec) {
  return [spec](std::size_t prefix) {
    std::vector<double> mins(spec.num_groups(), 0.0);
    if (prefix < spec.k) return mins;
    for (std::size_t p = 0; p < mins.size(); ++p) {
      mins[p] = static_cast<double>(lower_quota(spec.beta[p], prefix));
    }
    return mins;
  };
}

RankerOutput det_const_sort(const CandidateSet& set,
                            const GroupAssignment& groups,
                            const FairnessSpec& spec,
                            const DetConstSortOptions& options) {
  check_inputs(set.size(), groups, spec);
  const std::size_t n = set.size();
  const std::size_t g = groups.num_groups();
  const auto members = members_by_score(set, groups);
  const auto sizes = groups.group_sizes();
  const MinCountProvider provider =
      options.min_counts ? options.min_counts : default_min_counts(spec);
  const bool skip_exhausted = options.exhaustion == ExhaustionPolicy::kSkip;

  // mins[k - 1][p] = tempMinCounts_p(k); required[p][k] is its monotone
  // integer envelope used for look-ahead.
  std::vector<std::vector<double>> mins;
  mins.reserve(n);
  std::vector<std::vector<long>> required(g, std::vector<long>(n + 1, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    mins.push_back(provider(k));
    if (mins.back().size() != g) {
      throw std::invalid_argument("min-count provider returned " +
                                  std::to_string(mins.back().size()) +
                                  " values for " + std::to_string(g) +
                                  " groups");
    }
    for (std::size_t p = 0; p < g; ++p) {
      long need = std::max(0L, static_cast<long>(std::ceil(mins.back()[p])));
      if (skip_exhausted) need = std::min(need, static_cast<long>(sizes[p]));
      required[p][k] = std::max(required[p][k - 1], need);
    }
  }
  // Whether every future minimum stays reachable from `next` after
  // `placed` positions (deadline-only unit scheduling: Hall's condition).
  auto reachable = [&](const std::vector<std::size_t>& next,
                       std::size_t placed) {
    for (std::size_t t = placed + 1; t <= n; ++t) {
      long outstanding = 0;
      for (std::size_t p = 0; p < g; ++p) {
        if (required[p][t] > static_cast<long>(sizes[p])) return false;
        outstanding +=
            std::max(0L, required[p][t] - static_cast<long>(next[p]));
      }
      if (outstanding > static_cast<long>(t - placed)) return false;
    }
    return true;
  };
  // Prefix by which the j-th member of group p is needed, or n + 1.
  auto deadline = [&](std::size_t p, std::size_t j) {
    for (std::size_t t = 1; t <= n; ++t) {
      if (required[p][t] >= static_cast<long>(j)) return t;
    }
    return n + 1;
  };

  struct Entry {
    std::size_t candidate;
    double score;
    std::size_t max_index;
  };
  std::vector<Entry> list;
  list.reserve(n);
  std::vector<std::size_t> next(g, 0);
  auto by_next_score = [&](std::size_t a, std::size_t b) {
    return score_order_before(set[members[a][next[a]]],
                              set[members[b][next[b]]]);
  };
  std::vector<std::size_t> order_groups;

  for (std::size_t k = 1; list.size() < n; ++k) {
    const std::vector<double>& temp = mins[std::min(k, n) - 1];
    order_groups.clear();
    for (std::size_t p = 0; p < g; ++p) {
      if (!(static_cast<double>(next[p]) < temp[p])) continue;
      if (next[p] == sizes[p]) {
        if (skip_exhausted) continue;
        throw InfeasibleError("group '" + groups.labels()[p] +
                                  "' exhausted while its minimum count "
                                  "still grows at prefix " +
                                  std::to_string(k),
                              k);
      }
      order_groups.push_back(p);
    }
    std::sort(order_groups.begin(), order_groups.end(), by_next_score);
    for (std::size_t p : order_groups) {
      const std::size_t c = members[p][next[p]++];
      list.push_back({c, set[c].score, k});
      for (std::size_t s = list.size() - 1;
           s > 0 && list[s - 1].max_index >= s + 1 &&
           list[s - 1].score < list[s].score;
           --s) {
        std::swap(list[s - 1], list[s]);
      }
    }
    while (list.size() < std::min(k, n)) {
      order_groups.clear();
      for (std::size_t p = 0; p < g; ++p) {
        if (next[p] < sizes[p]) order_groups.push_back(p);
      }
      std::sort(order_groups.begin(), order_groups.end(), by_next_score);
      std::size_t chosen = order_groups.front();
      for (std::size_t p : order_groups) {
        ++next[p];
        const bool ok = reachable(next, list.size() + 1);
        --next[p];
        if (ok) {
          chosen = p;
          break;
        }
      }
      const std::size_t c = members[chosen][next[chosen]++];
      list.push_back({c, set[c].score, deadline(chosen, next[chosen])});
    }
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  for (const Entry& e : list) order.push_back(e.candidate);
  RankerOutput out{Ranking(std::move(order), n), {}};
  const std::vector<double> scores = set.scores();
  add_quality(out.diagnostics, out.ranking, scores);
  out.diagnostics["kendall_tau_to_input"] = static_cast<double>(
      kendall_tau(out.ranking, ranking_from_scores(set)));
  add_fairness(out.diagnostics, out.ranking, groups, spec);
  return out;
}

RankerOutput approx_multi_valued_ipf(const Ranking& input,
                                     const GroupAssignment& groups,
                                     const FairnessSpec& spec,
                                     const WeightTransform& perturb) {
  if (!input.complete()) {
    throw std::invalid_argument("input ranking must rank every candidate");
  }
  const std::size_t n = input.size();
  check_inputs(n, groups, spec);
  const std::size_t g = groups.num_groups();
  const auto sizes = groups.group_sizes();
  const FairSchedule schedule(PrefixBounds::from_spec(spec, n), sizes);
  if (const std::size_t f = schedule.first_failure(std::vector<std::size_t>(g, 0));
      f != 0) {
    throw InfeasibleError(infeasible_message(f), f);
  }

  // Row i is the candidate at input position i + 1, the j-th of its group.
  std::vector<std::size_t> member_rank(n);
  std::vector<std::size_t> seen(g, 0);
  for (std::size_t i = 0; i < n; ++i) {
    member_rank[i] = ++seen[groups.group_of(input.at(i + 1))];
  }
  CostMatrix weights(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = groups.group_of(input.at(i + 1));
    const std::size_t lo = schedule.release(p, member_rank[i]);
    const std::size_t hi = schedule.deadline(p, member_rank[i]);
    for (std::size_t pos = lo; pos <= hi && pos <= n; ++pos) {
      weights(i, pos - 1) =
          std::fabs(static_cast<double>(i + 1) - static_cast<double>(pos));
    }
  }
  if (perturb) perturb(weights);
  const auto assignment = min_cost_assignment(weights);
  if (!assignment) {
    throw InfeasibleError("no fair assignment of candidates to positions", 0);
  }

  // Keep each group's input order on the positions the matching gave it.
  std::vector<std::vector<std::size_t>> group_positions(g);
  for (std::size_t i = 0; i < n; ++i) {
    group_positions[groups.group_of(input.at(i + 1))].push_back(
        (*assignment)[i]);
  }
  for (auto& positions : group_positions) {
    std::sort(positions.begin(), positions.end());
  }
  std::vector<std::size_t> order(n);
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = input.at(i + 1);
    const std::size_t p = groups.group_of(c);
    order[group_positions[p][seen[p]++]] = c;
  }

  RankerOutput out{Ranking(std::move(order), input.universe()), {}};
  out.diagnostics["footrule_to_input"] = footrule_distance(out.ranking, input);
  out.diagnostics["kendall_tau_to_input"] =
      static_cast<double>(kendall_tau(out.ranking, input));
  add_fairness(out.diagnostics, out.ranking, groups, spec);
  return out;
}

}  // namespace fairrank

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

#include "fairrank/metrics.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fairrank/errors.h"

namespace fairrank {
namespace {

void require_same_items(const Ranking& a, const Ranking& b) {
  if (!a.same_items(b)) {
    throw std::invalid_argument("rankings do not rank the same candidates");
  }
}

// Inversions in `values` by merge sort.
std::size_t count_inversions(std::vector<std::size_t>& values,
                             std::vector<std::size_t>& scratch,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t inversions = count_inversions(values, scratch, lo, mid) +
                           count_inversions(values, scratch, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (values[j] < values[i]) {
      inversions += mid - i;
      scratch[out++] = values[j++];
    } else {
      scratch[out++] = values[i++];
    }
  }
  while (i < mid) scratch[out++] = values[i++];
  while (j < hi) scratch[out++] = values[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, values.begin() + lo);
  return inversions;
}

void check_groups(const Ranking& ranking, const GroupAssignment& groups,
                  const FairnessSpec& spec) {
  if (spec.num_groups() != groups.num_groups()) {
    throw std::invalid_argument("fairness spec has " +
                                std::to_string(spec.num_groups()) +
                                " groups, assignment has " +
                                std::to_string(groups.num_groups()));
  }
  if (ranking.universe() > groups.num_candidates()) {
    throw std::invalid_argument("group assignment does not cover ranking");
  }
}

// Calls visit(length, counts) for each prefix length 1..ranking.size().
void for_each_prefix(
    const Ranking& ranking, const GroupAssignment& groups,
    const std::function<bool(std::size_t, const std::vector<std::size_t>&)>&
        visit) {
  std::vector<std::size_t> counts(groups.num_groups(), 0);
  for (std::size_t len = 1; len <= ranking.size(); ++len) {
    ++counts[groups.group_of(ranking.at(len))];
    if (!visit(len, counts)) return;
  }
}

bool below_lower(const std::vector<std::size_t>& counts,
                 const FairnessSpec& spec, std::size_t len) {
  for (std::size_t p = 0; p < counts.size(); ++p) {
    if (static_cast<long>(counts[p]) < lower_quota(spec.beta[p], len)) {
      return true;
    }
  }
  return false;
}

bool above_upper(const std::vector<std::size_t>& counts,
                 const FairnessSpec& spec, std::size_t len) {
  for (std::size_t p = 0; p < counts.size(); ++p) {
    if (static_cast<long>(counts[p]) > upper_quota(spec.alpha[p], len)) {
      return true;
    }
  }
  return false;
}

}  // namespace

double spearman_distance(const Ranking& a, const Ranking& b) {
  require_same_items(a, b);
  double total = 0.0;
  for (std::size_t c : a.order()) {
    const double d = static_cast<double>(a.position_of(c)) -
                     static_cast<double>(b.position_of(c));
    total += d * d;
  }
  return total;
}

double footrule_distance(const Ranking& a, const Ranking& b) {
  require_same_items(a, b);
  double total = 0.0;
  for (std::size_t c : a.order()) {
    total += std::fabs(static_cast<double>(a.position_of(c)) -
                       static_cast<double>(b.position_of(c)));
  }
  return total;
}

std::size_t kendall_tau(const Ranking& a, const Ranking& b) {
  require_same_items(a, b);
  // Positions in `a` listed in `b`'s order; discordant pairs are inversions.
  std::vector<std::size_t> seq;
  seq.reserve(b.size());
  for (std::size_t c : b.order()) seq.push_back(a.position_of(c));
  std::vector<std::size_t> scratch(seq.size());
  return count_inversions(seq, scratch, 0, seq.size());
}

double kendall_tau_coefficient(const Ranking& a, const Ranking& b) {
  const double k = static_cast<double>(a.size());
  if (a.size() < 2) {
    throw std::invalid_argument("tau coefficient needs at least 2 items");
  }
  return 1.0 - 4.0 * static_cast<double>(kendall_tau(a, b)) / (k * (k - 1.0));
}

double dcg(const Ranking& ranking, std::span<const double> scores) {
  if (ranking.universe() > scores.size()) {
    throw std::invalid_argument("fewer scores than candidates");
  }
  double total = 0.0;
  for (std::size_t pos = 1; pos <= ranking.size(); ++pos) {
    total += scores[ranking.at(pos)] / std::log(1.0 + static_cast<double>(pos));
  }
  return total;
}

double ideal_dcg(std::size_t length, std::span<const double> scores) {
  std::vector<double> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double total = 0.0;
  for (std::size_t pos = 1; pos <= std::min(length, sorted.size()); ++pos) {
    total += sorted[pos - 1] / std::log(1.0 + static_cast<double>(pos));
  }
  return total;
}

double ndcg(const Ranking& ranking, std::span<const double> scores) {
  const double ideal = ideal_dcg(ranking.size(), scores);
  if (!(ideal > 0.0)) {
    throw UndefinedMetricError("NDCG undefined: ideal DCG is zero");
  }
  return dcg(ranking, scores) / ideal;
}

FairnessReport infeasible_index(const Ranking& ranking,
                                const GroupAssignment& groups,
                                const FairnessSpec& spec) {
  check_groups(ranking, groups, spec);
  FairnessReport report;
  for_each_prefix(ranking, groups,
                  [&](std::size_t len, const std::vector<std::size_t>& counts) {
                    if (below_lower(counts, spec, len)) {
                      ++report.lower_violations;
                    }
                    if (above_upper(counts, spec, len)) {
                      ++report.upper_violations;
                    }
                    return true;
                  });
  report.infeasible_index = report.lower_violations + report.upper_violations;
  report.ppfair =
      ranking.size() == 0
          ? 100.0
          : 100.0 * (1.0 - static_cast<double>(report.infeasible_index) /
                               static_cast<double>(ranking.size()));
  return report;
}

double ppfair(const Ranking& ranking, const GroupAssignment& groups,
              const FairnessSpec& spec) {
  return infeasible_index(ranking, groups, spec).ppfair;
}

bool is_fair(const Ranking& ranking, const GroupAssignment& groups,
             const FairnessSpec& spec) {
  check_groups(ranking, groups, spec);
  if (spec.k > ranking.size()) {
    throw std::out_of_range("prefix threshold exceeds ranking length");
  }
  bool fair = true;
  for_each_prefix(ranking, groups,
                  [&](std::size_t len, const std::vector<std::size_t>& counts) {
                    if (len < spec.k) return true;
                    fair = !below_lower(counts, spec, len) &&
                           !above_upper(counts, spec, len);
                    return fair;
                  });
  return fair;
}

bool is_weakly_fair(const Ranking& ranking, const GroupAssignment& groups,
                    const FairnessSpec& spec) {
  check_groups(ranking, groups, spec);
  const auto counts = group_counts_in_prefix(ranking, groups, spec.k);
  return !below_lower(counts, spec, spec.k) &&
         !above_upper(counts, spec, spec.k);
}

}  // namespace fairrank

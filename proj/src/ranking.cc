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

#include "fairrank/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace fairrank {
namespace {

constexpr double kQuotaGuard = 1e-9;
constexpr double kProportionTolerance = 1e-9;

}  // namespace

CandidateSet::CandidateSet(std::vector<Candidate> candidates)
    : candidates_(std::move(candidates)) {
  if (candidates_.empty()) {
    throw std::invalid_argument("candidate set is empty");
  }
  std::unordered_set<std::string> seen;
  for (const Candidate& c : candidates_) {
    if (!seen.insert(c.id).second) {
      throw std::invalid_argument("duplicate candidate id '" + c.id + "'");
    }
    if (!std::isfinite(c.score)) {
      throw std::invalid_argument("candidate '" + c.id +
                                  "' has a non-finite score");
    }
    if (c.score < 0.0) {
      throw std::invalid_argument("candidate '" + c.id +
                                  "' has a negative score");
    }
  }
}

std::vector<double> CandidateSet::scores() const {
  std::vector<double> out;
  out.reserve(candidates_.size());
  for (const Candidate& c : candidates_) out.push_back(c.score);
  return out;
}

std::size_t CandidateSet::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (candidates_[i].id == id) return i;
  }
  throw std::out_of_range("unknown candidate id '" + id + "'");
}

CandidateSet CandidateSet::subset(std::span<const std::size_t> indices) const {
  std::vector<Candidate> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(candidates_.at(i));
  return CandidateSet(std::move(picked));
}

bool score_order_before(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.id < b.id;
}

Ranking::Ranking(std::vector<std::size_t> order, std::size_t universe)
    : order_(std::move(order)), positions_(universe, 0) {
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const std::size_t c = order_[pos];
    if (c >= universe) {
      throw std::invalid_argument("ranked candidate index " +
                                  std::to_string(c) + " outside universe of " +
                                  std::to_string(universe));
    }
    if (positions_[c] != 0) {
      throw std::invalid_argument("candidate " + std::to_string(c) +
                                  " ranked twice");
    }
    positions_[c] = pos + 1;
  }
}

Ranking::Ranking(std::vector<std::size_t> order)
    : Ranking(order, order.size()) {}

Ranking Ranking::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Ranking(std::move(order), n);
}

std::size_t Ranking::at(std::size_t position) const {
  if (position < 1 || position > order_.size()) {
    throw std::out_of_range("position " + std::to_string(position) +
                            " outside ranking of length " +
                            std::to_string(order_.size()));
  }
  return order_[position - 1];
}

std::size_t Ranking::position_of(std::size_t candidate) const {
  if (candidate >= positions_.size()) return 0;
  return positions_[candidate];
}

Ranking Ranking::prefix(std::size_t length) const {
  if (length > order_.size()) {
    throw std::out_of_range("prefix longer than ranking");
  }
  return Ranking(std::vector<std::size_t>(order_.begin(),
                                          order_.begin() + length),
                 universe());
}

bool Ranking::same_items(const Ranking& other) const {
  if (universe() != other.universe() || size() != other.size()) return false;
  for (std::size_t c : order_) {
    if (!other.contains(c)) return false;
  }
  return true;
}

GroupAssignment::GroupAssignment(std::string attribute,
                                 std::vector<std::string> labels,
                                 std::vector<std::size_t> membership)
    : attribute_(std::move(attribute)),
      labels_(std::move(labels)),
      membership_(std::move(membership)) {
  if (labels_.empty()) {
    throw std::invalid_argument("group assignment needs at least one group");
  }
  for (std::size_t g : membership_) {
    if (g >= labels_.size()) {
      throw std::invalid_argument("group index " + std::to_string(g) +
                                  " out of range for attribute '" +
                                  attribute_ + "'");
    }
  }
}

GroupAssignment GroupAssignment::from_attribute(const CandidateSet& set,
                                                const std::string& attribute) {
  std::set<std::string> values;
  for (const Candidate& c : set.candidates()) {
    auto it = c.attributes.find(attribute);
    if (it == c.attributes.end()) {
      throw std::invalid_argument("candidate '" + c.id +
                                  "' has no attribute '" + attribute + "'");
    }
    values.insert(it->second);
  }
  std::vector<std::string> labels(values.begin(), values.end());
  std::vector<std::size_t> membership;
  membership.reserve(set.size());
  for (const Candidate& c : set.candidates()) {
    const std::string& v = c.attributes.at(attribute);
    membership.push_back(static_cast<std::size_t>(
        std::lower_bound(labels.begin(), labels.end(), v) - labels.begin()));
  }
  return GroupAssignment(attribute, std::move(labels), std::move(membership));
}

std::vector<std::size_t> GroupAssignment::group_sizes() const {
  std::vector<std::size_t> sizes(labels_.size(), 0);
  for (std::size_t g : membership_) ++sizes[g];
  return sizes;
}

GroupAssignment GroupAssignment::subset(
    std::span<const std::size_t> indices) const {
  std::vector<std::size_t> membership;
  membership.reserve(indices.size());
  for (std::size_t i : indices) membership.push_back(membership_.at(i));
  return GroupAssignment(attribute_, labels_, std::move(membership));
}

void FairnessSpec::validate() const {
  if (alpha.size() != beta.size() || alpha.empty()) {
    throw std::invalid_argument(
        "alpha and beta must be non-empty and of equal length");
  }
  if (k < 1) throw std::invalid_argument("prefix threshold k must be >= 1");
  double sum_alpha = 0.0;
  double sum_beta = 0.0;
  for (std::size_t p = 0; p < alpha.size(); ++p) {
    if (!(beta[p] >= 0.0 && beta[p] <= alpha[p] && alpha[p] <= 1.0)) {
      throw std::invalid_argument("group " + std::to_string(p) +
                                  " violates 0 <= beta <= alpha <= 1");
    }
    sum_alpha += alpha[p];
    sum_beta += beta[p];
  }
  if (sum_beta > 1.0 + kProportionTolerance) {
    throw std::invalid_argument("lower proportions sum above 1");
  }
  if (sum_alpha < 1.0 - kProportionTolerance) {
    throw std::invalid_argument("upper proportions sum below 1");
  }
}

FairnessSpec FairnessSpec::make(std::vector<double> alpha,
                                std::vector<double> beta, std::size_t k) {
  FairnessSpec spec{std::move(alpha), std::move(beta), k};
  spec.validate();
  return spec;
}

FairnessSpec FairnessSpec::proportional(const GroupAssignment& groups,
                                        std::size_t k) {
  const auto sizes = groups.group_sizes();
  const double n = static_cast<double>(groups.num_candidates());
  std::vector<double> share;
  share.reserve(sizes.size());
  for (std::size_t s : sizes) share.push_back(static_cast<double>(s) / n);
  return make(share, share, k);
}

FairnessSpec FairnessSpec::unconstrained(std::size_t num_groups,
                                         std::size_t k) {
  return make(std::vector<double>(num_groups, 1.0),
              std::vector<double>(num_groups, 0.0), k);
}

long lower_quota(double proportion, std::size_t length) {
  return static_cast<long>(
      std::floor(proportion * static_cast<double>(length) + kQuotaGuard));
}

long upper_quota(double proportion, std::size_t length) {
  return static_cast<long>(
      std::ceil(proportion * static_cast<double>(length) - kQuotaGuard));
}

Ranking ranking_from_scores(const CandidateSet& set) {
  std::vector<std::size_t> order(set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score_order_before(set[a], set[b]);
  });
  return Ranking(std::move(order), set.size());
}

std::vector<std::size_t> group_counts_in_prefix(const Ranking& ranking,
                                                const GroupAssignment& groups,
                                                std::size_t k) {
  if (k < 1 || k > ranking.size()) {
    throw std::out_of_range("prefix length " + std::to_string(k) +
                            " outside [1, " + std::to_string(ranking.size()) +
                            "]");
  }
  std::vector<std::size_t> counts(groups.num_groups(), 0);
  for (std::size_t pos = 1; pos <= k; ++pos) {
    ++counts[groups.group_of(ranking.at(pos))];
  }
  return counts;
}

}  // namespace fairrank

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

#ifndef FAIRRANK_RANKING_H_
#define FAIRRANK_RANKING_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace fairrank {

struct Candidate {
  std::string id;
  double score = 0.0;
  std::map<std::string, std::string> attributes;
};

// An ordered, validated collection of candidates. Candidates are addressed
// by their index in this collection everywhere else in the library.
class CandidateSet {
 public:
  // Throws std::invalid_argument if empty, if ids repeat, or if a score is
  // not finite or negative.
  explicit CandidateSet(std::vector<Candidate> candidates);

  std::size_t size() const { return candidates_.size(); }
  const Candidate& operator[](std::size_t index) const {
    return candidates_[index];
  }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  std::vector<double> scores() const;

  // Index of the candidate with this id; throws std::out_of_range.
  std::size_t index_of(const std::string& id) const;

  // A new set holding the given candidates in the given order.
  CandidateSet subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<Candidate> candidates_;
};

// Total order used whenever candidates are sorted by quality: score
// descending, then id ascending.
bool score_order_before(const Candidate& a, const Candidate& b);

// A ranking of (a subset of) the candidates 0..universe-1. Positions are
// 1-based: at(1) is the top candidate.
class Ranking {
 public:
  Ranking() = default;
  // Throws std::invalid_argument on repeats or indices >= universe.
  Ranking(std::vector<std::size_t> order, std::size_t universe);
  // Complete ranking over order.size() candidates.
  explicit Ranking(std::vector<std::size_t> order);

  static Ranking identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  std::size_t universe() const { return positions_.size(); }
  bool complete() const { return size() == universe(); }

  std::size_t at(std::size_t position) const;
  // 1-based position of the candidate, or 0 if it is not ranked.
  std::size_t position_of(std::size_t candidate) const;
  bool contains(std::size_t candidate) const {
    return candidate < positions_.size() && positions_[candidate] != 0;
  }

  std::span<const std::size_t> order() const { return order_; }
  Ranking prefix(std::size_t length) const;

  // True iff both rank exactly the same candidates of the same universe.
  bool same_items(const Ranking& other) const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_ && a.positions_.size() == b.positions_.size();
  }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> positions_;
};

// Partition of the candidates into groups by one protected attribute.
class GroupAssignment {
 public:
  // membership[i] is the group index of candidate i, in [0, labels.size()).
  GroupAssignment(std::string attribute, std::vector<std::string> labels,
                  std::vector<std::size_t> membership);

  // Groups are the distinct values of `attribute`, sorted. Throws
  // std::invalid_argument if a candidate lacks the attribute.
  static GroupAssignment from_attribute(const CandidateSet& set,
                                        const std::string& attribute);

  const std::string& attribute() const { return attribute_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t num_groups() const { return labels_.size(); }
  std::size_t num_candidates() const { return membership_.size(); }
  std::size_t group_of(std::size_t candidate) const {
    return membership_[candidate];
  }
  std::vector<std::size_t> group_sizes() const;
  GroupAssignment subset(std::span<const std::size_t> indices) const;

 private:
  std::string attribute_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> membership_;
};

// Proportional representation bounds: every prefix P with |P| >= k must
// hold between floor(beta_p |P|) and ceil(alpha_p |P|) members of group p.
struct FairnessSpec {
  std::vector<double> alpha;  // upper proportions
  std::vector<double> beta;   // lower proportions
  std::size_t k = 1;

  // Throws std::invalid_argument unless 0 <= beta_p <= alpha_p <= 1,
  // sum(beta) <= 1 <= sum(alpha) and k >= 1.
  void validate() const;
  std::size_t num_groups() const { return alpha.size(); }

  static FairnessSpec make(std::vector<double> alpha, std::vector<double> beta,
                           std::size_t k = 1);
  // alpha = beta = group share of the candidate set.
  static FairnessSpec proportional(const GroupAssignment& groups,
                                   std::size_t k = 1);
  // beta = 0, alpha = 1.
  static FairnessSpec unconstrained(std::size_t num_groups, std::size_t k = 1);
};

// floor(proportion * length) and ceil(proportion * length), guarded
// against representation error in the product.
long lower_quota(double proportion, std::size_t length);
long upper_quota(double proportion, std::size_t length);

Ranking ranking_from_scores(const CandidateSet& set);

// Members of each group among the top `k` positions. Throws
// std::out_of_range unless 1 <= k <= ranking.size().
std::vector<std::size_t> group_counts_in_prefix(const Ranking& ranking,
                                                const GroupAssignment& groups,
                                                std::size_t k);

}  // namespace fairrank

#endif  // FAIRRANK_RANKING_H_

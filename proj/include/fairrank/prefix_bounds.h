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

#ifndef FAIRRANK_PREFIX_BOUNDS_H_
#define FAIRRANK_PREFIX_BOUNDS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fairrank/ranking.h"

namespace fairrank {

// Per-group, per-prefix bounds on group counts: a ranking of length n obeys
// them when lower(p, l) <= count_l(G_p) <= upper(p, l) for all l in [1, n].
// Bounds are real-valued so that perturbed constraint systems can be
// represented; an integer count c satisfies c >= 2.3 iff c >= 3.
class PrefixBounds {
 public:
  // Vacuous bounds: lower 0, upper l.
  PrefixBounds(std::size_t num_groups, std::size_t length);

  // floor(beta_p l) <= count <= ceil(alpha_p l) for l >= spec.k; vacuous
  // below spec.k.
  static PrefixBounds from_spec(const FairnessSpec& spec, std::size_t length);

  std::size_t num_groups() const { return num_groups_; }
  std::size_t length() const { return length_; }

  double lower(std::size_t group, std::size_t prefix) const {
    return lower_[index(group, prefix)];
  }
  double upper(std::size_t group, std::size_t prefix) const {
    return upper_[index(group, prefix)];
  }
  void set_lower(std::size_t group, std::size_t prefix, double value) {
    lower_[index(group, prefix)] = value;
  }
  void set_upper(std::size_t group, std::size_t prefix, double value) {
    upper_[index(group, prefix)] = value;
  }

  // Whether `counts` (summing to `prefix`) is within bounds at `prefix`.
  bool admits(std::span<const std::size_t> counts, std::size_t prefix) const;

 private:
  std::size_t index(std::size_t group, std::size_t prefix) const {
    return group * length_ + (prefix - 1);
  }

  std::size_t num_groups_;
  std::size_t length_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

// Feasibility oracle for extending a partial ranking under PrefixBounds.
//
// Because group counts only grow, the bounds are equivalent to monotone
// integer ones (prefix maxima of the lower bounds, suffix minima of the
// upper bounds). The j-th member of group p then has a release prefix (the
// first l whose upper bound admits j members) and a deadline (the first l
// whose lower bound requires j members). Extending a partial ranking is a
// unit-job scheduling problem with release times and deadlines, which
// earliest-deadline-first decides exactly.
class FairSchedule {
 public:
  FairSchedule(const PrefixBounds& bounds,
               std::span<const std::size_t> group_sizes);

  // 0 if the state (group counts after sum(counts) positions) extends to a
  // complete ranking of all members, otherwise the first prefix length at
  // which every extension fails.
  std::size_t first_failure(std::span<const std::size_t> counts) const;
  bool feasible(std::span<const std::size_t> counts) const {
    return first_failure(counts) == 0;
  }

  // Latest prefix by which the j-th (1-based) member of the group must be
  // placed; length() when unconstrained.
  std::size_t deadline(std::size_t group, std::size_t member) const {
    return deadline_[group][member - 1];
  }
  // Earliest prefix at which the j-th member may be placed; length() + 1
  // when the upper bounds never admit it.
  std::size_t release(std::size_t group, std::size_t member) const {
    return release_[group][member - 1];
  }
  std::size_t length() const { return length_; }

 private:
  std::size_t length_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::size_t>> release_;
  std::vector<std::vector<std::size_t>> deadline_;
  // Smallest prefix whose monotone lower bound exceeds the group size, or
  // 0 if none.
  std::vector<std::size_t> overflow_;
};

}  // namespace fairrank

#endif  // FAIRRANK_PREFIX_BOUNDS_H_

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

#include "fairrank/prefix_bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fairrank {

PrefixBounds::PrefixBounds(std::size_t num_groups, std::size_t length)
    : num_groups_(num_groups),
      length_(length),
      lower_(num_groups * length, 0.0),
      upper_(num_groups * length, 0.0) {
  for (std::size_t p = 0; p < num_groups; ++p) {
    for (std::size_t l = 1; l <= length; ++l) {
      set_upper(p, l, static_cast<double>(l));
    }
  }
}

PrefixBounds PrefixBounds::from_spec(const FairnessSpec& spec,
                                     std::size_t length) {
  spec.validate();
  PrefixBounds bounds(spec.num_groups(), length);
  for (std::size_t p = 0; p < spec.num_groups(); ++p) {
    for (std::size_t l = spec.k; l <= length; ++l) {
      bounds.set_lower(p, l, static_cast<double>(lower_quota(spec.beta[p], l)));
      bounds.set_upper(p, l, static_cast<double>(upper_quota(spec.alpha[p], l)));
    }
  }
  return bounds;
}

bool PrefixBounds::admits(std::span<const std::size_t> counts,
                          std::size_t prefix) const {
  if (prefix == 0) return true;
  for (std::size_t p = 0; p < num_groups_; ++p) {
    const double c = static_cast<double>(counts[p]);
    if (c < lower(p, prefix) || c > upper(p, prefix)) return false;
  }
  return true;
}

FairSchedule::FairSchedule(const PrefixBounds& bounds,
                           std::span<const std::size_t> group_sizes)
    : length_(bounds.length()),
      sizes_(group_sizes.begin(), group_sizes.end()),
      release_(group_sizes.size()),
      deadline_(group_sizes.size()),
      overflow_(group_sizes.size(), 0) {
  if (group_sizes.size() != bounds.num_groups()) {
    throw std::invalid_argument("group count mismatch between bounds and sizes");
  }
  if (std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}) !=
      length_) {
    throw std::invalid_argument("group sizes do not sum to the ranking length");
  }
  const std::size_t n = length_;
  for (std::size_t p = 0; p < sizes_.size(); ++p) {
    // Monotone integer envelopes, indexed by prefix 1..n.
    std::vector<long> required(n + 1, 0);
    std::vector<long> allowed(n + 2, std::numeric_limits<long>::max());
    for (std::size_t l = 1; l <= n; ++l) {
      const long need =
          std::max(0L, static_cast<long>(std::ceil(bounds.lower(p, l))));
      required[l] = std::max(required[l - 1], need);
      if (overflow_[p] == 0 && required[l] > static_cast<long>(sizes_[p])) {
        overflow_[p] = l;
      }
    }
    for (std::size_t l = n; l >= 1; --l) {
      const long cap = static_cast<long>(std::floor(bounds.upper(p, l)));
      allowed[l] = std::min(allowed[l + 1], cap);
    }
    release_[p].assign(sizes_[p], n + 1);
    deadline_[p].assign(sizes_[p], n);
    std::size_t l = 1;
    for (std::size_t j = 1; j <= sizes_[p]; ++j) {
      while (l <= n && allowed[l] < static_cast<long>(j)) ++l;
      release_[p][j - 1] = l;  // n + 1 when never admitted
    }
    l = 1;
    for (std::size_t j = 1; j <= sizes_[p]; ++j) {
      while (l <= n && required[l] < static_cast<long>(j)) ++l;
      deadline_[p][j - 1] = std::min(l, n);
    }
  }
}

std::size_t FairSchedule::first_failure(
    std::span<const std::size_t> counts) const {
  const std::size_t g = sizes_.size();
  const std::size_t placed =
      std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  std::size_t failure = 0;
  auto note = [&](std::size_t prefix) {
    prefix = std::max<std::size_t>(prefix, 1);
    if (failure == 0 || prefix < failure) failure = prefix;
  };
  for (std::size_t p = 0; p < g; ++p) {
    if (overflow_[p] != 0) note(overflow_[p]);
    if (counts[p] > sizes_[p]) return std::max<std::size_t>(placed, 1);
    // Members already placed must have been released by now.
    if (counts[p] > 0 && release_[p][counts[p] - 1] > placed) note(placed);
    // The next member may already be overdue.
    if (counts[p] < sizes_[p] && deadline_[p][counts[p]] <= placed) {
      note(placed);
    }
  }
  if (failure != 0 && failure <= placed) return failure;

  std::vector<std::size_t> next(counts.begin(), counts.end());
  for (std::size_t t = placed + 1; t <= length_; ++t) {
    std::size_t best = g;
    for (std::size_t p = 0; p < g; ++p) {
      if (next[p] >= sizes_[p] || release_[p][next[p]] > t) continue;
      if (best == g ||
          deadline_[p][next[p]] < deadline_[best][next[best]]) {
        best = p;
      }
    }
    if (best == g) {
      note(t);
      break;
    }
    ++next[best];
    bool missed = false;
    for (std::size_t p = 0; p < g; ++p) {
      if (next[p] < sizes_[p] && deadline_[p][next[p]] <= t) missed = true;
    }
    if (missed) {
      note(t);
      break;
    }
  }
  return failure;
}

}  // namespace fairrank

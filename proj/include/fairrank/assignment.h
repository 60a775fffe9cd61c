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

#ifndef FAIRRANK_ASSIGNMENT_H_
#define FAIRRANK_ASSIGNMENT_H_

#include <cstddef>
#include <optional>
#include <vector>

namespace fairrank {

// Dense row-major square cost matrix. +infinity marks a forbidden pair.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t n, double fill = 0.0)
      : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t row, std::size_t col) {
    return cells_[row * n_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const {
    return cells_[row * n_ + col];
  }

 private:
  std::size_t n_;
  std::vector<double> cells_;
};

// Minimum-cost perfect matching (Hungarian method with potentials, O(n^3)).
// Returns column_of_row, or nullopt if every perfect matching uses a
// forbidden pair.
std::optional<std::vector<std::size_t>> min_cost_assignment(
    const CostMatrix& costs);

}  // namespace fairrank

#endif  // FAIRRANK_ASSIGNMENT_H_

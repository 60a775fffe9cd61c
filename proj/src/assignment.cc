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

#include "fairrank/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fairrank {

std::optional<std::vector<std::size_t>> min_cost_assignment(
    const CostMatrix& costs) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = costs.size();
  // 1-based potentials; column 0 is the virtual root of each search.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0), way(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const std::size_t r0 = row_of_col[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double c = costs(r0 - 1, col - 1);
        if (std::isfinite(c)) {
          const double slack = c - u[r0] - v[col];
          if (slack < min_slack[col]) {
            min_slack[col] = slack;
            way[col] = col0;
          }
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          col1 = col;
        }
      }
      if (col1 == 0) return std::nullopt;  // no admissible augmenting path
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[row_of_col[col]] += delta;
          v[col] -= delta;
        } else if (std::isfinite(min_slack[col])) {
          min_slack[col] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      row_of_col[col0] = row_of_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<std::size_t> column_of_row(n);
  for (std::size_t col = 1; col <= n; ++col) {
    column_of_row[row_of_col[col] - 1] = col - 1;
  }
  return column_of_row;
}

}  // namespace fairrank

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

#include "fairrank/random.h"

#include <vector>

namespace fairrank {

Rng make_stream(std::uint64_t master_seed,
                std::initializer_list<std::uint64_t> coordinates) {
  std::vector<std::uint32_t> words;
  words.reserve(2 * (coordinates.size() + 1) + 1);
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(master_seed);
  words.push_back(static_cast<std::uint32_t>(coordinates.size()));
  for (std::uint64_t c : coordinates) push(c);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

}  // namespace fairrank

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

#ifndef FAIRRANK_RANDOM_H_
#define FAIRRANK_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace fairrank {

using Rng = std::mt19937_64;

// An engine seeded from a master seed and a tuple of integer coordinates
// (trial index, grid cell, ...). Streams for distinct coordinates are
// independent of the order in which they are created.
Rng make_stream(std::uint64_t master_seed,
                std::initializer_list<std::uint64_t> coordinates);

}  // namespace fairrank

#endif  // FAIRRANK_RANDOM_H_

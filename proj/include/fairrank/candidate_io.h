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

#ifndef FAIRRANK_CANDIDATE_IO_H_
#define FAIRRANK_CANDIDATE_IO_H_

#include <iosfwd>
#include <string>

#include "fairrank/ranking.h"

namespace fairrank {

// Delimited candidate table with a header row. Required columns `id` and
// `score`; every column named `attr:<name>` becomes attribute <name>.
// Throws DataError naming the line on malformed input.
CandidateSet read_candidates(std::istream& in, char delimiter = ',');
CandidateSet read_candidates_file(const std::string& path,
                                  char delimiter = ',');

// One candidate id per line (blank lines and '#' comments skipped).
Ranking read_ranking(std::istream& in, const CandidateSet& set);
Ranking read_ranking_file(const std::string& path, const CandidateSet& set);

// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

}  // namespace fairrank

#endif  // FAIRRANK_CANDIDATE_IO_H_

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

#include "fairrank/candidate_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <vector>

#include "fairrank/errors.h"

namespace fairrank {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\"");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\"");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
  std::vector<std::string> out;
  std::string field;
  for (char ch : line) {
    if (ch == delimiter) {
      out.push_back(trim(field));
      field.clear();
    } else {
      field += ch;
    }
  }
  out.push_back(trim(field));
  return out;
}

bool blank_or_comment(const std::string& line) {
  const auto b = line.find_first_not_of(" \t\r");
  return b == std::string::npos || line[b] == '#';
}

}  // namespace

CandidateSet read_candidates(std::istream& in, char delimiter) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!blank_or_comment(line)) header = split_fields(line, delimiter);
  }
  if (header.empty()) throw DataError("candidate file has no header");
  std::size_t id_col = header.size(), score_col = header.size();
  std::vector<std::pair<std::size_t, std::string>> attr_cols;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "id") id_col = i;
    else if (header[i] == "score") score_col = i;
    else if (header[i].rfind("attr:", 0) == 0) {
      attr_cols.emplace_back(i, header[i].substr(5));
    }
  }
  if (id_col == header.size() || score_col == header.size()) {
    throw DataError("candidate header needs 'id' and 'score' columns");
  }
  std::vector<Candidate> candidates;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    const auto fields = split_fields(line, delimiter);
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    Candidate c;
    c.id = fields[id_col];
    const std::string& s = fields[score_col];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), c.score);
    if (ec != std::errc() || ptr != s.data() + s.size() ||
        !std::isfinite(c.score) || c.score < 0.0) {
      throw DataError("line " + std::to_string(line_no) + ": bad score '" + s +
                      "'");
    }
    for (const auto& [col, name] : attr_cols) c.attributes[name] = fields[col];
    candidates.push_back(std::move(c));
  }
  try {
    return CandidateSet(std::move(candidates));
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

CandidateSet read_candidates_file(const std::string& path, char delimiter) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return read_candidates(in, delimiter);
}

Ranking read_ranking(std::istream& in, const CandidateSet& set) {
  std::vector<std::size_t> order;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    const std::string id = trim(line.substr(0, line.find_first_of(",\t")));
    try {
      order.push_back(set.index_of(id));
    } catch (const std::out_of_range&) {
      throw DataError("line " + std::to_string(line_no) +
                      ": unknown candidate '" + id + "'");
    }
  }
  try {
    return Ranking(std::move(order), set.size());
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

Ranking read_ranking_file(const std::string& path, const CandidateSet& set) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  return read_ranking(in, set);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace fairrank

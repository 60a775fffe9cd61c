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

#ifndef FAIRRANK_GERMAN_CREDIT_H_
#define FAIRRANK_GERMAN_CREDIT_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fairrank/ranking.h"

namespace fairrank {

// Column map for a German Credit table. A column is addressed by zero-based
// index (a string of digits) or, when the file has a header, by name. The
// defaults read the UCI Statlog `german.data` file: whitespace separated,
// no header, coded attributes (A91..A95 personal status/sex, A151..A153
// housing).
struct GermanCreditFormat {
  // '\0' splits on runs of whitespace.
  char delimiter = '\0';
  bool header = false;
  std::string amount_column = "4";
  std::string sex_column = "8";
  std::string age_column = "12";
  std::string housing_column = "14";
};

struct GermanCreditRecord {
  double credit_amount = 0.0;
  std::string sex;       // "female" | "male"
  std::string age_band;  // "<35" | ">=35"
  std::string housing;   // "free" | "own" | "rent"
};

struct GermanCreditData {
  std::vector<GermanCreditRecord> records;
  // Scored by credit amount; attributes "sex", "age-band", "sex-age"
  // (e.g. "<35-female") and "housing".
  CandidateSet candidates;
  GroupAssignment sex_age;
  GroupAssignment housing;
};

// Throws DataError naming the 1-based line on malformed rows or unknown
// category values.
std::vector<GermanCreditRecord> read_german_credit(
    const std::string& path, const GermanCreditFormat& format = {});

// Also throws DataError unless sex-age has 4 groups and housing 3.
GermanCreditData ingest_german_credit(const std::string& path,
                                      const GermanCreditFormat& format = {});
GermanCreditData make_german_credit_data(std::vector<GermanCreditRecord> records);

// (sex-age label, housing label) -> count.
using GroupTable = std::map<std::pair<std::string, std::string>, std::size_t>;
GroupTable group_table(const GermanCreditData& data);

// Expected cross-tabulation of the 1000-row UCI file.
const GroupTable& reference_group_table();

}  // namespace fairrank

#endif  // FAIRRANK_GERMAN_CREDIT_H_

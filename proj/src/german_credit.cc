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

#include "fairrank/german_credit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fairrank/errors.h"

namespace fairrank {
namespace {

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  if (delimiter == '\0') {
    std::istringstream in(line);
    std::string f;
    while (in >> f) fields.push_back(f);
    return fields;
  }
  std::string field;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == delimiter && !quoted) {
      fields.push_back(field);
      field.clear();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  fields.push_back(field);
  return fields;
}

std::string lower_case(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool parse_number(const std::string& text, double& out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::size_t resolve_column(const std::string& selector,
                           const std::vector<std::string>& header) {
  if (!selector.empty() &&
      std::all_of(selector.begin(), selector.end(),
                  [](unsigned char c) { return std::isdigit(c); })) {
    return static_cast<std::size_t>(std::stoul(selector));
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == selector) return i;
  }
  throw DataError("column '" + selector + "' not found in header");
}

std::string normalize_sex(const std::string& raw) {
  const std::string v = lower_case(raw);
  if (v == "a91" || v == "a93" || v == "a94" || v == "male") return "male";
  if (v == "a92" || v == "a95" || v == "female") return "female";
  return {};
}

std::string normalize_housing(const std::string& raw) {
  const std::string v = lower_case(raw);
  if (v == "a151" || v == "rent") return "rent";
  if (v == "a152" || v == "own") return "own";
  if (v == "a153" || v == "free" || v == "for free") return "free";
  return {};
}

[[noreturn]] void row_error(std::size_t line, const std::string& what) {
  throw DataError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<GermanCreditRecord> read_german_credit(
    const std::string& path, const GermanCreditFormat& format) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::vector<std::string> header;
  std::size_t amount = 0, sex = 0, age = 0, housing = 0;
  bool resolved = false;
  std::vector<GermanCreditRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> fields = split(line, format.delimiter);
    if (format.header && header.empty()) {
      header = std::move(fields);
      continue;
    }
    if (!resolved) {
      amount = resolve_column(format.amount_column, header);
      sex = resolve_column(format.sex_column, header);
      age = resolve_column(format.age_column, header);
      housing = resolve_column(format.housing_column, header);
      resolved = true;
    }
    const std::size_t needed = std::max({amount, sex, age, housing}) + 1;
    if (fields.size() < needed) {
      row_error(line_no, "expected at least " + std::to_string(needed) +
                             " fields, found " + std::to_string(fields.size()));
    }
    GermanCreditRecord r;
    if (!parse_number(fields[amount], r.credit_amount) ||
        r.credit_amount < 0.0) {
      row_error(line_no, "bad credit amount '" + fields[amount] + "'");
    }
    double years = 0.0;
    if (!parse_number(fields[age], years) || years < 0.0) {
      row_error(line_no, "bad age '" + fields[age] + "'");
    }
    r.age_band = years < 35.0 ? "<35" : ">=35";
    r.sex = normalize_sex(fields[sex]);
    if (r.sex.empty()) row_error(line_no, "unknown sex code '" + fields[sex] + "'");
    r.housing = normalize_housing(fields[housing]);
    if (r.housing.empty()) {
      row_error(line_no, "unknown housing code '" + fields[housing] + "'");
    }
    records.push_back(std::move(r));
  }
  if (records.empty()) throw DataError("'" + path + "' holds no records");
  return records;
}

GermanCreditData make_german_credit_data(
    std::vector<GermanCreditRecord> records) {
  std::vector<Candidate> candidates;
  candidates.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const GermanCreditRecord& r = records[i];
    char id[16];
    std::snprintf(id, sizeof(id), "c%04zu", i + 1);
    candidates.push_back(
        {id,
         r.credit_amount,
         {{"sex", r.sex},
          {"age-band", r.age_band},
          {"sex-age", r.age_band + "-" + r.sex},
          {"housing", r.housing}}});
  }
  CandidateSet set(std::move(candidates));
  GroupAssignment sex_age = GroupAssignment::from_attribute(set, "sex-age");
  GroupAssignment housing = GroupAssignment::from_attribute(set, "housing");
  if (sex_age.num_groups() != 4) {
    throw DataError("expected 4 sex-age groups, found " +
                    std::to_string(sex_age.num_groups()));
  }
  if (housing.num_groups() != 3) {
    throw DataError("expected 3 housing groups, found " +
                    std::to_string(housing.num_groups()));
  }
  return {std::move(records), std::move(set), std::move(sex_age),
          std::move(housing)};
}

GermanCreditData ingest_german_credit(const std::string& path,
                                      const GermanCreditFormat& format) {
  return make_german_credit_data(read_german_credit(path, format));
}

GroupTable group_table(const GermanCreditData& data) {
  GroupTable table;
  for (std::size_t i = 0; i < data.candidates.size(); ++i) {
    ++table[{data.sex_age.labels()[data.sex_age.group_of(i)],
             data.housing.labels()[data.housing.group_of(i)]}];
  }
  return table;
}

const GroupTable& reference_group_table() {
  static const GroupTable table = {
      {{"<35-female", "free"}, 2},   {{"<35-female", "own"}, 131},
      {{"<35-female", "rent"}, 80},  {{"<35-male", "free"}, 23},
      {{"<35-male", "own"}, 261},    {{"<35-male", "rent"}, 51},
      {{">=35-female", "free"}, 17}, {{">=35-female", "own"}, 65},
      {{">=35-female", "rent"}, 15}, {{">=35-male", "free"}, 66},
      {{">=35-male", "own"}, 256},   {{">=35-male", "rent"}, 33},
  };
  return table;
}

}  // namespace fairrank

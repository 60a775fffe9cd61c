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

#ifndef FAIRRANK_EXPERIMENTS_H_
#define FAIRRANK_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairrank/german_credit.h"
#include "json.hpp"

namespace fairrank {

// Everything needed to rerun one experiment. Rerunning a manifest
// reproduces its output files byte for byte.
struct ExperimentManifest {
  std::string experiment;  // "exp1-ii" | "exp2-ndcg" | "exp3-german"
  std::uint64_t seed = 20240601;
  std::vector<double> thetas;
  std::size_t bootstrap_resamples = 1000;
  std::string output_dir = "results";
  bool write_raw = true;

  // exp1 and exp2: candidates split into two equal groups.
  std::size_t num_candidates = 10;
  // exp1: Mallows draws per (center, theta); exp2: draws per score instance.
  std::size_t samples = 10000;
  // exp1: depth to which group A is stacked at the top of each center.
  std::vector<std::size_t> center_depths;
  // exp2: score shift of group B and number of score draws per shift.
  std::vector<double> deltas;
  std::size_t instances = 100;

  // exp3
  std::string dataset = "data/german.data";
  GermanCreditFormat dataset_format;
  std::vector<std::size_t> sizes;
  std::vector<double> sigmas;
  std::size_t repetitions = 15;
  std::vector<std::size_t> sample_counts;  // Mallows best-of-m variants
  std::string criterion = "max-ndcg";     // "max-ndcg" | "min-kt" | "min-ii"
  std::string dcs_exhaustion = "skip";    // noisy DetConstSort: "skip" | "fail"
  // Sex-age fairness targets; group shares of each instance when absent.
  std::optional<std::vector<double>> alpha;
  std::optional<std::vector<double>> beta;

  // Grid defaults for the given experiment id.
  static ExperimentManifest defaults(const std::string& experiment);
  // Defaults overridden by the keys present. Throws std::invalid_argument on
  // unknown keys, wrong types or an unknown experiment id.
  static ExperimentManifest from_json(const nlohmann::json& j);
  static ExperimentManifest load(const std::string& path);
  nlohmann::json to_json() const;
  // FNV-1a of the canonical JSON form, as 16 hex digits.
  std::string hash() const;
};

struct ResultRow {
  std::string experiment;
  std::optional<double> size;
  std::optional<double> delta;
  std::optional<double> theta;
  std::optional<double> sigma;
  std::optional<double> center_ii;
  std::string algorithm;
  std::string metric;
  double point = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct ResultTable {
  std::string name;
  std::vector<ResultRow> rows;

  // Rows matching every given field.
  std::vector<const ResultRow*> select(
      const std::string& metric, const std::string& algorithm = {},
      std::optional<double> theta = std::nullopt,
      std::optional<double> sigma = std::nullopt,
      std::optional<double> size = std::nullopt,
      std::optional<double> delta = std::nullopt) const;
};

struct ExperimentResult {
  std::string experiment;
  std::vector<ResultTable> tables;
  std::vector<nlohmann::json> raw;  // one JSON object per log line

  const ResultTable& table(const std::string& name) const;
};

ExperimentResult run_exp1(const ExperimentManifest& manifest);
ExperimentResult run_exp2(const ExperimentManifest& manifest);
ExperimentResult run_exp3(const ExperimentManifest& manifest,
                          const GermanCreditData& data);
ExperimentResult run_exp3(const ExperimentManifest& manifest);
ExperimentResult run_experiment(const ExperimentManifest& manifest);

// Centers used by exp1: group A (candidates [0, n/2)) occupies the top
// `depth` positions, the remainder alternates starting with group B.
std::vector<std::size_t> stacked_center(std::size_t num_candidates,
                                        std::size_t depth);

// Writes <table>.csv and <table>.json per table, <experiment>_raw.jsonl and
// run_info.json into `dir` (created if missing).
void write_result(const ExperimentResult& result,
                  const ExperimentManifest& manifest, const std::string& dir);

std::string table_csv(const ResultTable& table);
nlohmann::json table_json(const ResultTable& table);

}  // namespace fairrank

#endif  // FAIRRANK_EXPERIMENTS_H_

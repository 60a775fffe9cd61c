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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fairrank/candidate_io.h"
#include "fairrank/constraint_noise.h"
#include "fairrank/errors.h"
#include "fairrank/experiments.h"
#include "fairrank/fair_rankers.h"
#include "fairrank/german_credit.h"
#include "fairrank/metrics.h"
#include "json.hpp"

namespace fairrank::cli {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RankConfig {
  std::string input;
  std::string output;
  std::string delimiter = ",";
  std::string algorithm = "exact-fair-dcg";
  std::string attribute;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::size_t k = 1;
  double theta = 1.0;
  std::size_t samples = 1;
  std::string criterion = "max-ndcg";
  double sigma = 0.0;
  std::optional<std::uint64_t> seed;
  std::string format = "table";
};

struct MeasureConfig {
  std::string input;
  std::string ranking;
  std::string other;
  std::string delimiter = ",";
  std::vector<std::string> metrics;
  std::string attribute;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::size_t k = 1;
  std::string format = "table";
};

struct ExperimentConfig {
  std::string manifest;
  std::string output_dir;
};

struct DatasetConfig {
  std::string path = "data/german.data";
};

const std::vector<std::string> kAlgorithms = {
    "exact-fair-dcg", "det-const-sort", "approx-ipf", "mallows", "center",
    "score"};
const std::vector<std::string> kMetrics = {
    "kt", "tau-coeff", "spearman", "footrule", "ndcg", "infeasible-index",
    "ppfair"};

char parse_delimiter(const std::string& text) {
  if (text == "\\t" || text == "tab") return '\t';
  if (text.size() != 1) throw UsageError("--delimiter must be one character");
  return text[0];
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string(kSeedEnv) + " is not an unsigned integer");
  }
  return value;
}

GroupAssignment resolve_groups(const CandidateSet& set,
                               const std::string& attribute) {
  if (attribute.empty()) {
    const auto& attrs = set[0].attributes;
    if (attrs.size() != 1) {
      throw UsageError(
          "--attribute is required unless the input has exactly one "
          "attribute column");
    }
    return GroupAssignment::from_attribute(set, attrs.begin()->first);
  }
  return GroupAssignment::from_attribute(set, attribute);
}

FairnessSpec resolve_spec(const GroupAssignment& groups,
                          const std::vector<double>& alpha,
                          const std::vector<double>& beta, std::size_t k) {
  if (alpha.empty() && beta.empty()) {
    return FairnessSpec::proportional(groups, k);
  }
  if (alpha.size() != groups.num_groups() || beta.size() != groups.num_groups()) {
    throw UsageError("--alpha and --beta need one value per group (" +
                     std::to_string(groups.num_groups()) + " groups)");
  }
  return FairnessSpec::make(alpha, beta, k);
}

void write_or_print(const std::string& text, const std::string& path,
                    std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write '" + path + "'");
  file << text;
}

RankerOutput rank_with(const RankConfig& cfg, const CandidateSet& set,
                       const GroupAssignment& groups, const FairnessSpec& spec,
                       std::uint64_t seed) {
  const auto& a = cfg.algorithm;
  if (a == "mallows") {
    SelectionCriterion criterion;
    if (cfg.criterion == "min-kt") {
      criterion = SelectionCriterion::min_kendall_tau();
    } else if (cfg.criterion == "min-ii") {
      criterion = SelectionCriterion::min_infeasible_index(groups, spec);
    }
    return noisy_ranking(set, groups, spec, cfg.samples, criterion, cfg.theta,
                         seed);
  }
  if (a == "center" || a == "score") {
    RankerOutput out;
    out.ranking = a == "center" ? build_weakly_fair_center(set, groups, spec)
                                : ranking_from_scores(set);
    const std::vector<double> scores = set.scores();
    out.diagnostics["dcg"] = dcg(out.ranking, scores);
    out.diagnostics["ndcg"] = ndcg(out.ranking, scores);
    const FairnessReport report = infeasible_index(out.ranking, groups, spec);
    out.diagnostics["infeasible_index"] =
        static_cast<double>(report.infeasible_index);
    out.diagnostics["ppfair"] = report.ppfair;
    return out;
  }
  if (a == "exact-fair-dcg") {
    PrefixBounds bounds = PrefixBounds::from_spec(spec, set.size());
    if (cfg.sigma > 0.0) {
      ConstraintNoise noise({cfg.sigma, seed, NoiseSpec::Scheme::kIlpBounds});
      noise.perturb_ilp_bounds(bounds);
    }
    return exact_fair_dcg(set, groups, bounds);
  }
  if (a == "det-const-sort") {
    DetConstSortOptions options;
    if (cfg.sigma > 0.0) {
      ConstraintNoise noise({cfg.sigma, seed, NoiseSpec::Scheme::kDcsMinCounts});
      options.min_counts = noisy_min_counts(spec, noise);
      options.exhaustion = ExhaustionPolicy::kSkip;
    }
    return det_const_sort(set, groups, spec, options);
  }
  // approx-ipf re-ranks the score order.
  RankerOutput out;
  if (cfg.sigma > 0.0) {
    ConstraintNoise noise({cfg.sigma, seed, NoiseSpec::Scheme::kIpfWeights});
    out = approx_multi_valued_ipf(ranking_from_scores(set), groups, spec,
                                  ipf_weight_noise(noise));
  } else {
    out = approx_multi_valued_ipf(ranking_from_scores(set), groups, spec);
  }
  const std::vector<double> scores = set.scores();
  out.diagnostics["dcg"] = dcg(out.ranking, scores);
  out.diagnostics["ndcg"] = ndcg(out.ranking, scores);
  return out;
}

std::string render_rank(const RankConfig& cfg, const CandidateSet& set,
                        const GroupAssignment& groups,
                        const RankerOutput& result) {
  std::ostringstream out;
  const auto order = result.ranking.order();
  if (cfg.format == "json") {
    json ranking = json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Candidate& c = set[order[i]];
      ranking.push_back({{"position", i + 1},
                         {"id", c.id},
                         {"score", c.score},
                         {"group", groups.labels()[groups.group_of(order[i])]}});
    }
    json diag = json::object();
    for (const auto& [k, v] : result.diagnostics) diag[k] = v;
    out << json{{"algorithm", cfg.algorithm},
                {"attribute", groups.attribute()},
                {"ranking", ranking},
                {"diagnostics", diag}}
               .dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << "position,id,score,group\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Candidate& c = set[order[i]];
      out << i + 1 << ',' << c.id << ',' << format_double(c.score) << ','
          << groups.labels()[groups.group_of(order[i])] << '\n';
    }
    out << "\nmetric,value\n";
    for (const auto& [k, v] : result.diagnostics) {
      out << k << ',' << format_double(v) << '\n';
    }
  } else {
    out << "algorithm: " << cfg.algorithm << '\n';
    out << "position\tid\tscore\tgroup\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Candidate& c = set[order[i]];
      out << i + 1 << '\t' << c.id << '\t' << format_double(c.score) << '\t'
          << groups.labels()[groups.group_of(order[i])] << '\n';
    }
    out << '\n';
    for (const auto& [k, v] : result.diagnostics) {
      out << k << '\t' << format_double(v) << '\n';
    }
  }
  return out.str();
}

int cmd_rank(const RankConfig& cfg, std::ostream& out) {
  if (cfg.sigma < 0.0) throw UsageError("--sigma must be non-negative");
  if (cfg.sigma > 0.0 &&
      (cfg.algorithm == "mallows" || cfg.algorithm == "center" ||
       cfg.algorithm == "score")) {
    throw UsageError("--sigma applies only to exact-fair-dcg, det-const-sort "
                     "and approx-ipf");
  }
  if (cfg.samples == 0) throw UsageError("--m must be at least 1");
  const std::uint64_t seed = resolve_seed(cfg.seed);
  const CandidateSet set =
      read_candidates_file(cfg.input, parse_delimiter(cfg.delimiter));
  const GroupAssignment groups = resolve_groups(set, cfg.attribute);
  const FairnessSpec spec = resolve_spec(groups, cfg.alpha, cfg.beta, cfg.k);
  const RankerOutput result = rank_with(cfg, set, groups, spec, seed);
  write_or_print(render_rank(cfg, set, groups, result), cfg.output, out);
  return kOk;
}

int cmd_measure(const MeasureConfig& cfg, std::ostream& out) {
  const CandidateSet set =
      read_candidates_file(cfg.input, parse_delimiter(cfg.delimiter));
  const Ranking ranking = cfg.ranking.empty() ? ranking_from_scores(set)
                                              : read_ranking_file(cfg.ranking, set);
  std::vector<std::string> metrics = cfg.metrics;
  if (metrics.empty()) {
    metrics = {"ndcg", "infeasible-index", "ppfair"};
    if (!cfg.other.empty()) {
      metrics.insert(metrics.begin(), {"kt", "tau-coeff", "spearman", "footrule"});
    }
  }
  std::optional<Ranking> other;
  if (!cfg.other.empty()) {
    other = read_ranking_file(cfg.other, set);
    if (!other->same_items(ranking)) {
      throw DataError("rankings '" + cfg.ranking + "' and '" + cfg.other +
                      "' do not rank the same candidates");
    }
  }
  std::optional<GroupAssignment> groups;
  std::optional<FairnessSpec> spec;
  std::vector<std::pair<std::string, double>> values;
  for (const std::string& m : metrics) {
    const bool pairwise = m == "kt" || m == "tau-coeff" || m == "spearman" ||
                          m == "footrule";
    if (pairwise && !other) {
      throw UsageError("metric '" + m + "' needs --other");
    }
    if ((m == "infeasible-index" || m == "ppfair") && !groups) {
      groups = resolve_groups(set, cfg.attribute);
      spec = resolve_spec(*groups, cfg.alpha, cfg.beta, cfg.k);
    }
    double v = 0.0;
    if (m == "kt") {
      v = static_cast<double>(kendall_tau(ranking, *other));
    } else if (m == "tau-coeff") {
      v = kendall_tau_coefficient(ranking, *other);
    } else if (m == "spearman") {
      v = spearman_distance(ranking, *other);
    } else if (m == "footrule") {
      v = footrule_distance(ranking, *other);
    } else if (m == "ndcg") {
      v = ndcg(ranking, set.scores());
    } else if (m == "infeasible-index") {
      v = static_cast<double>(
          infeasible_index(ranking, *groups, *spec).infeasible_index);
    } else {
      v = ppfair(ranking, *groups, *spec);
    }
    values.emplace_back(m, v);
  }

  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : values) j[k] = v;
    out << j.dump(2) << '\n';
  } else {
    const char sep = cfg.format == "csv" ? ',' : '\t';
    if (cfg.format == "csv") out << "metric,value\n";
    for (const auto& [k, v] : values) out << k << sep << format_double(v) << '\n';
  }
  return kOk;
}

int cmd_experiment(const ExperimentConfig& cfg, std::ostream& out) {
  ExperimentManifest manifest = ExperimentManifest::load(cfg.manifest);
  if (!cfg.output_dir.empty()) manifest.output_dir = cfg.output_dir;
  if (manifest.experiment == "exp3-german") {
    namespace fs = std::filesystem;
    const fs::path dataset(manifest.dataset);
    if (dataset.is_relative() && !fs::exists(dataset)) {
      const fs::path beside = fs::path(cfg.manifest).parent_path() / dataset;
      if (fs::exists(beside)) manifest.dataset = beside.string();
    }
  }
  out << "manifest hash: " << manifest.hash() << '\n';
  const ExperimentResult result = run_experiment(manifest);
  write_result(result, manifest, manifest.output_dir);
  for (const ResultTable& t : result.tables) {
    out << "wrote " << (std::filesystem::path(manifest.output_dir) / t.name).string()
        << ".{csv,json} (" << t.rows.size() << " rows)\n";
  }
  return kOk;
}

int cmd_dataset_check(const DatasetConfig& cfg, std::ostream& out) {
  const GermanCreditData data = ingest_german_credit(cfg.path);
  const GroupTable table = group_table(data);
  const GroupTable& reference = reference_group_table();
  out << "records\t" << data.records.size() << '\n';
  out << "sex-age\thousing\tcount\texpected\n";
  bool match = table.size() == reference.size();
  for (const auto& [cell, expected] : reference) {
    const auto it = table.find(cell);
    const std::size_t got = it == table.end() ? 0 : it->second;
    match = match && got == expected;
    out << cell.first << '\t' << cell.second << '\t' << got << '\t' << expected
        << '\n';
  }
  out << (match ? "OK: group counts match the reference table\n"
                : "MISMATCH: group counts differ from the reference table\n");
  return match ? kOk : kDataError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fair ranking toolkit: rank candidates under group "
               "representation constraints, measure rankings and reproduce "
               "experiments."};
  app.name("fairrank");
  app.require_subcommand(1);
  app.footer(std::string("Environment:\n  ") + kSeedEnv +
             "  default for --seed (otherwise 0)\n\nExit codes: 0 success, "
             "1 internal error, 2 usage error, 3 data error, 4 infeasible "
             "constraints");

  RankConfig rank;
  auto* rank_cmd = app.add_subcommand("rank", "Rank a candidate file");
  rank_cmd->add_option("-i,--input", rank.input,
                       "Candidate file with id, score and attr:<name> columns")
      ->required();
  rank_cmd->add_option("-o,--output", rank.output, "Write here instead of stdout");
  rank_cmd->add_option("--delimiter", rank.delimiter, "Field delimiter (default ,)");
  rank_cmd->add_option("-a,--algo", rank.algorithm, "Ranking algorithm")
      ->check(CLI::IsMember(kAlgorithms))
      ->capture_default_str();
  rank_cmd->add_option("--attribute", rank.attribute,
                       "Protected attribute (needed when the file has several)");
  rank_cmd->add_option("--alpha", rank.alpha,
                       "Upper proportions, one per group in sorted label order")
      ->delimiter(',');
  rank_cmd->add_option("--beta", rank.beta,
                       "Lower proportions, one per group in sorted label order")
      ->delimiter(',');
  rank_cmd->add_option("--k", rank.k, "Shortest constrained prefix")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rank_cmd->add_option("--theta", rank.theta, "Mallows dispersion")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  rank_cmd->add_option("--m", rank.samples, "Mallows samples to choose from")
      ->capture_default_str();
  rank_cmd->add_option("--criterion", rank.criterion, "Mallows sample selection")
      ->check(CLI::IsMember({"max-ndcg", "min-kt", "min-ii"}))
      ->capture_default_str();
  rank_cmd->add_option("--sigma", rank.sigma,
                       "Gaussian noise on the constraints (exact-fair-dcg, "
                       "det-const-sort, approx-ipf)")
      ->capture_default_str();
  rank_cmd->add_option("--seed", rank.seed, "Random seed");
  rank_cmd->add_option("-f,--format", rank.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  MeasureConfig measure;
  auto* measure_cmd = app.add_subcommand("measure", "Compute ranking metrics");
  measure_cmd->add_option("-i,--input", measure.input, "Candidate file")->required();
  measure_cmd->add_option("-r,--ranking", measure.ranking,
                          "Ranking file, one id per line (default: score order)");
  measure_cmd->add_option("--other", measure.other,
                          "Second ranking for distance metrics");
  measure_cmd->add_option("--delimiter", measure.delimiter, "Field delimiter");
  measure_cmd->add_option("-m,--metrics", measure.metrics, "Metrics to report")
      ->delimiter(',')
      ->check(CLI::IsMember(kMetrics));
  measure_cmd->add_option("--attribute", measure.attribute, "Protected attribute");
  measure_cmd->add_option("--alpha", measure.alpha, "Upper proportions")
      ->delimiter(',');
  measure_cmd->add_option("--beta", measure.beta, "Lower proportions")
      ->delimiter(',');
  measure_cmd->add_option("--k", measure.k, "Shortest constrained prefix")
      ->check(CLI::PositiveNumber);
  measure_cmd->add_option("-f,--format", measure.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  ExperimentConfig experiment;
  auto* experiment_cmd =
      app.add_subcommand("experiment", "Run an experiment manifest");
  experiment_cmd->add_option("--manifest", experiment.manifest, "Manifest JSON")
      ->required();
  experiment_cmd->add_option("--output-dir", experiment.output_dir,
                             "Override the manifest's output_dir");

  DatasetConfig dataset;
  auto* dataset_cmd = app.add_subcommand("dataset", "Dataset utilities");
  dataset_cmd->require_subcommand(1);
  auto* check_cmd = dataset_cmd->add_subcommand(
      "check", "Verify German Credit group counts against the reference table");
  check_cmd->add_option("--path", dataset.path, "german.data file")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (rank_cmd->parsed()) return cmd_rank(rank, out);
    if (measure_cmd->parsed()) return cmd_measure(measure, out);
    if (experiment_cmd->parsed()) return cmd_experiment(experiment, out);
    return cmd_dataset_check(dataset, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what();
    if (e.prefix() > 0) err << " (failing prefix " << e.prefix() << ")";
    err << '\n';
    return kInfeasible;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const UndefinedMetricError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::out_of_range& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace fairrank::cli

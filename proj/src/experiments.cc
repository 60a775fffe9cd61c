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

#include "fairrank/experiments.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fairrank/bootstrap.h"
#include "fairrank/candidate_io.h"
#include "fairrank/constraint_noise.h"
#include "fairrank/errors.h"
#include "fairrank/fair_rankers.h"
#include "fairrank/mallows.h"
#include "fairrank/metrics.h"
#include "fairrank/random.h"

namespace fairrank {
namespace {

using nlohmann::json;

constexpr std::uint64_t kExp1 = 1, kExp2 = 2, kExp3 = 3;
constexpr std::uint64_t kSampling = 0, kBootstrap = 1, kScores = 2,
                        kNoise = 3;

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> coords) {
  Rng rng = make_stream(master, coords);
  return rng();
}

// Two equal groups: candidates [0, n/2) are "A", the rest "B".
GroupAssignment two_groups(std::size_t n) {
  std::vector<std::size_t> membership(n);
  for (std::size_t i = 0; i < n; ++i) membership[i] = i < n / 2 ? 0 : 1;
  return GroupAssignment("group", {"A", "B"}, std::move(membership));
}

FairnessSpec half_and_half() { return FairnessSpec::make({0.5, 0.5}, {0.5, 0.5}); }

void check_even(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("num_candidates must be even and >= 2");
  }
}

template <typename T>
void read_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

ResultRow make_row(const std::string& experiment, const std::string& algorithm,
                   const std::string& metric, const BootstrapCI& ci) {
  ResultRow row;
  row.experiment = experiment;
  row.algorithm = algorithm;
  row.metric = metric;
  row.point = ci.point;
  row.ci_lo = ci.lower;
  row.ci_hi = ci.upper;
  return row;
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string optional_csv(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

ExperimentManifest ExperimentManifest::defaults(const std::string& experiment) {
  ExperimentManifest m;
  m.experiment = experiment;
  if (experiment == "exp1-ii") {
    m.thetas = {0.1, 0.25, 0.5, 1.0, 2.0, 5.0};
    m.center_depths = {0, 1, 2, 3, 4, 5};
    m.samples = 10000;
    m.output_dir = "results/exp1";
  } else if (experiment == "exp2-ndcg") {
    m.thetas = {0.1, 0.5, 1.0, 2.0, 5.0};
    for (int i = 0; i <= 10; ++i) m.deltas.push_back(i / 10.0);
    m.samples = 100;
    m.instances = 100;
    m.output_dir = "results/exp2";
  } else if (experiment == "exp3-german") {
    m.thetas = {0.5, 1.0};
    m.sigmas = {0.0, 1.0};
    for (std::size_t s = 10; s <= 100; s += 10) m.sizes.push_back(s);
    m.sample_counts = {1, 15};
    m.repetitions = 15;
    m.output_dir = "results/exp3";
  } else {
    throw std::invalid_argument("unknown experiment '" + experiment + "'");
  }
  return m;
}

ExperimentManifest ExperimentManifest::from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("manifest must be an object");
  static const std::set<std::string> known = {
      "experiment", "seed", "thetas", "bootstrap_resamples", "output_dir",
      "write_raw", "num_candidates", "samples", "center_depths", "deltas",
      "instances", "dataset", "dataset_format", "sizes", "sigmas",
      "repetitions", "sample_counts", "criterion", "dcs_exhaustion", "alpha",
      "beta"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw std::invalid_argument("unknown manifest key '" + key + "'");
    }
  }
  if (!j.contains("experiment")) {
    throw std::invalid_argument("manifest lacks 'experiment'");
  }
  try {
    ExperimentManifest m = defaults(j.at("experiment").get<std::string>());
    read_if(j, "seed", m.seed);
    read_if(j, "thetas", m.thetas);
    read_if(j, "bootstrap_resamples", m.bootstrap_resamples);
    read_if(j, "output_dir", m.output_dir);
    read_if(j, "write_raw", m.write_raw);
    read_if(j, "num_candidates", m.num_candidates);
    read_if(j, "samples", m.samples);
    read_if(j, "center_depths", m.center_depths);
    read_if(j, "deltas", m.deltas);
    read_if(j, "instances", m.instances);
    read_if(j, "dataset", m.dataset);
    read_if(j, "sizes", m.sizes);
    read_if(j, "sigmas", m.sigmas);
    read_if(j, "repetitions", m.repetitions);
    read_if(j, "sample_counts", m.sample_counts);
    read_if(j, "criterion", m.criterion);
    read_if(j, "dcs_exhaustion", m.dcs_exhaustion);
    if (j.contains("alpha")) m.alpha = j.at("alpha").get<std::vector<double>>();
    if (j.contains("beta")) m.beta = j.at("beta").get<std::vector<double>>();
    if (j.contains("dataset_format")) {
      const json& f = j.at("dataset_format");
      std::string delimiter;
      read_if(f, "delimiter", delimiter);
      if (delimiter.size() > 1) {
        throw std::invalid_argument("dataset delimiter must be one character");
      }
      m.dataset_format.delimiter = delimiter.empty() ? '\0' : delimiter[0];
      read_if(f, "header", m.dataset_format.header);
      read_if(f, "amount_column", m.dataset_format.amount_column);
      read_if(f, "sex_column", m.dataset_format.sex_column);
      read_if(f, "age_column", m.dataset_format.age_column);
      read_if(f, "housing_column", m.dataset_format.housing_column);
    }
    if (m.criterion != "max-ndcg" && m.criterion != "min-kt" &&
        m.criterion != "min-ii") {
      throw std::invalid_argument("unknown criterion '" + m.criterion + "'");
    }
    if (m.dcs_exhaustion != "skip" && m.dcs_exhaustion != "fail") {
      throw std::invalid_argument("dcs_exhaustion must be 'skip' or 'fail'");
    }
    if (m.alpha.has_value() != m.beta.has_value()) {
      throw std::invalid_argument("alpha and beta must be given together");
    }
    if (m.bootstrap_resamples == 0) {
      throw std::invalid_argument("bootstrap_resamples must be positive");
    }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
}

ExperimentManifest ExperimentManifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("manifest is not JSON: ") +
                                e.what());
  }
  return from_json(j);
}

json ExperimentManifest::to_json() const {
  json j = {{"experiment", experiment},
            {"seed", seed},
            {"thetas", thetas},
            {"bootstrap_resamples", bootstrap_resamples},
            {"output_dir", output_dir},
            {"write_raw", write_raw}};
  if (experiment == "exp1-ii" || experiment == "exp2-ndcg") {
    j["num_candidates"] = num_candidates;
    j["samples"] = samples;
  }
  if (experiment == "exp1-ii") j["center_depths"] = center_depths;
  if (experiment == "exp2-ndcg") {
    j["deltas"] = deltas;
    j["instances"] = instances;
  }
  if (experiment == "exp3-german") {
    j["dataset"] = dataset;
    j["dataset_format"] = {
        {"delimiter", dataset_format.delimiter == '\0'
                          ? std::string()
                          : std::string(1, dataset_format.delimiter)},
        {"header", dataset_format.header},
        {"amount_column", dataset_format.amount_column},
        {"sex_column", dataset_format.sex_column},
        {"age_column", dataset_format.age_column},
        {"housing_column", dataset_format.housing_column}};
    j["sizes"] = sizes;
    j["sigmas"] = sigmas;
    j["repetitions"] = repetitions;
    j["sample_counts"] = sample_counts;
    j["criterion"] = criterion;
    j["dcs_exhaustion"] = dcs_exhaustion;
    if (alpha) {
      j["alpha"] = *alpha;
      j["beta"] = *beta;
    }
  }
  return j;
}

std::string ExperimentManifest::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<const ResultRow*> ResultTable::select(
    const std::string& metric, const std::string& algorithm,
    std::optional<double> theta, std::optional<double> sigma,
    std::optional<double> size, std::optional<double> delta) const {
  std::vector<const ResultRow*> out;
  for (const ResultRow& r : rows) {
    if (r.metric != metric) continue;
    if (!algorithm.empty() && r.algorithm != algorithm) continue;
    if (theta && r.theta != theta) continue;
    if (sigma && r.sigma != sigma) continue;
    if (size && r.size != size) continue;
    if (delta && r.delta != delta) continue;
    out.push_back(&r);
  }
  return out;
}

const ResultTable& ExperimentResult::table(const std::string& name) const {
  for (const ResultTable& t : tables) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("no result table '" + name + "'");
}

std::vector<std::size_t> stacked_center(std::size_t num_candidates,
                                        std::size_t depth) {
  check_even(num_candidates);
  const std::size_t half = num_candidates / 2;
  if (depth > half) throw std::invalid_argument("center depth exceeds group size");
  std::vector<std::size_t> order;
  std::size_t next_a = 0, next_b = half;
  for (; next_a < depth; ++next_a) order.push_back(next_a);
  bool take_b = true;
  while (order.size() < num_candidates) {
    if ((take_b && next_b < num_candidates) || next_a == half) {
      order.push_back(next_b++);
    } else {
      order.push_back(next_a++);
    }
    take_b = !take_b;
  }
  return order;
}

ExperimentResult run_exp1(const ExperimentManifest& manifest) {
  const std::size_t n = manifest.num_candidates;
  check_even(n);
  const GroupAssignment groups = two_groups(n);
  const FairnessSpec spec = half_and_half();
  ExperimentResult result{manifest.experiment, {{"exp1_sample_ii", {}}}, {}};
  ResultTable& table = result.tables[0];

  for (std::size_t ci = 0; ci < manifest.center_depths.size(); ++ci) {
    const std::size_t depth = manifest.center_depths[ci];
    const Ranking center(stacked_center(n, depth), n);
    const double center_ii =
        static_cast<double>(infeasible_index(center, groups, spec).infeasible_index);
    ResultRow ref = make_row(manifest.experiment, "center", "center_ii",
                             {center_ii, center_ii, center_ii, 0});
    ref.size = static_cast<double>(depth);
    ref.center_ii = center_ii;
    table.rows.push_back(ref);

    for (std::size_t ti = 0; ti < manifest.thetas.size(); ++ti) {
      const double theta = manifest.thetas[ti];
      Rng rng = make_stream(manifest.seed, {kExp1, kSampling, ci, ti});
      const MallowsParams params{center, theta};
      std::vector<double> ii(manifest.samples);
      for (double& v : ii) {
        v = static_cast<double>(
            infeasible_index(sample(params, rng), groups, spec).infeasible_index);
      }
      const BootstrapCI boot = bootstrap_ci(
          ii, Statistic::kMean, manifest.bootstrap_resamples,
          derive_seed(manifest.seed, {kExp1, kBootstrap, ci, ti}));
      ResultRow row = make_row(manifest.experiment, "mallows", "sample_ii", boot);
      row.size = static_cast<double>(depth);
      row.theta = theta;
      row.center_ii = center_ii;
      table.rows.push_back(row);
      if (manifest.write_raw) {
        result.raw.push_back({{"center_depth", depth},
                              {"center_ii", center_ii},
                              {"theta", theta},
                              {"ii", ii}});
      }
    }
  }
  return result;
}

ExperimentResult run_exp2(const ExperimentManifest& manifest) {
  const std::size_t n = manifest.num_candidates;
  check_even(n);
  const std::size_t half = n / 2;
  const GroupAssignment groups = two_groups(n);
  const FairnessSpec spec = half_and_half();
  ExperimentResult result{manifest.experiment,
                          {{"exp2_center_ii", {}},
                           {"exp2_sample_ii", {}},
                           {"exp2_sample_ndcg", {}}},
                          {}};

  for (std::size_t di = 0; di < manifest.deltas.size(); ++di) {
    const double delta = manifest.deltas[di];
    std::vector<double> center_ii;
    std::vector<std::vector<double>> ii(manifest.thetas.size());
    std::vector<std::vector<double>> quality(manifest.thetas.size());
    for (std::size_t inst = 0; inst < manifest.instances; ++inst) {
      Rng score_rng = make_stream(manifest.seed, {kExp2, kScores, di, inst});
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      std::vector<Candidate> candidates;
      for (std::size_t i = 0; i < n; ++i) {
        const bool in_a = i < half;
        char id[16];
        std::snprintf(id, sizeof(id), "%c%zu", in_a ? 'a' : 'b',
                      (in_a ? i : i - half) + 1);
        candidates.push_back({id, unit(score_rng) + (in_a ? 0.0 : delta), {}});
      }
      const CandidateSet set(std::move(candidates));
      const std::vector<double> scores = set.scores();
      const Ranking center = ranking_from_scores(set);
      const double cii = static_cast<double>(
          infeasible_index(center, groups, spec).infeasible_index);
      center_ii.push_back(cii);

      for (std::size_t ti = 0; ti < manifest.thetas.size(); ++ti) {
        Rng rng = make_stream(manifest.seed, {kExp2, kSampling, di, inst, ti});
        const MallowsParams params{center, manifest.thetas[ti]};
        std::vector<double> cell_ii, cell_ndcg;
        for (std::size_t s = 0; s < manifest.samples; ++s) {
          const Ranking draw = sample(params, rng);
          cell_ii.push_back(static_cast<double>(
              infeasible_index(draw, groups, spec).infeasible_index));
          cell_ndcg.push_back(ndcg(draw, scores));
        }
        ii[ti].insert(ii[ti].end(), cell_ii.begin(), cell_ii.end());
        quality[ti].insert(quality[ti].end(), cell_ndcg.begin(), cell_ndcg.end());
        if (manifest.write_raw) {
          result.raw.push_back({{"delta", delta},
                                {"instance", inst},
                                {"theta", manifest.thetas[ti]},
                                {"center_ii", cii},
                                {"ii", cell_ii},
                                {"ndcg", cell_ndcg}});
        }
      }
    }
    ResultRow crow = make_row(
        manifest.experiment, "center", "center_ii",
        bootstrap_ci(center_ii, Statistic::kMean, manifest.bootstrap_resamples,
                     derive_seed(manifest.seed, {kExp2, kBootstrap, di, 99})));
    crow.delta = delta;
    result.tables[0].rows.push_back(crow);
    for (std::size_t ti = 0; ti < manifest.thetas.size(); ++ti) {
      const double theta = manifest.thetas[ti];
      ResultRow irow = make_row(
          manifest.experiment, "mallows", "sample_ii",
          bootstrap_ci(ii[ti], Statistic::kMean, manifest.bootstrap_resamples,
                       derive_seed(manifest.seed, {kExp2, kBootstrap, di, ti, 0})));
      irow.delta = delta;
      irow.theta = theta;
      result.tables[1].rows.push_back(irow);
      ResultRow qrow = make_row(
          manifest.experiment, "mallows", "sample_ndcg",
          bootstrap_ci(quality[ti], Statistic::kMean,
                       manifest.bootstrap_resamples,
                       derive_seed(manifest.seed, {kExp2, kBootstrap, di, ti, 1})));
      qrow.delta = delta;
      qrow.theta = theta;
      result.tables[2].rows.push_back(qrow);
    }
  }
  return result;
}

namespace {

struct Exp3Instance {
  CandidateSet set;
  GroupAssignment sex_age;
  GroupAssignment housing;
  FairnessSpec sex_age_spec;
  FairnessSpec housing_spec;
  std::vector<std::string> ids;
};

SelectionCriterion exp3_criterion(const ExperimentManifest& m,
                                  const Exp3Instance& inst) {
  if (m.criterion == "min-kt") return SelectionCriterion::min_kendall_tau();
  if (m.criterion == "min-ii") {
    return SelectionCriterion::min_infeasible_index(inst.sex_age,
                                                    inst.sex_age_spec);
  }
  return SelectionCriterion::max_ndcg();
}

struct Trial {
  bool feasible = false;
  std::string error;
  Ranking ranking;
};

}  // namespace

ExperimentResult run_exp3(const ExperimentManifest& manifest,
                          const GermanCreditData& data) {
  const FairnessSpec full_spec = FairnessSpec::proportional(data.sex_age);
  const Ranking full_center =
      build_weakly_fair_center(data.candidates, data.sex_age, full_spec);
  const ExhaustionPolicy noisy_exhaustion = manifest.dcs_exhaustion == "skip"
                                                ? ExhaustionPolicy::kSkip
                                                : ExhaustionPolicy::kFail;

  ExperimentResult result{manifest.experiment,
                          {{"exp3_ppfair_sexage", {}},
                           {"exp3_ppfair_housing", {}},
                           {"exp3_ndcg", {}}},
                          {}};
  std::vector<std::string> algorithms = {"ilp", "det-const-sort",
                                         "approx-multi-valued-ipf"};
  for (std::size_t m : manifest.sample_counts) {
    algorithms.push_back("mallows-" + std::to_string(m));
  }

  for (std::size_t si = 0; si < manifest.sizes.size(); ++si) {
    const std::size_t size = manifest.sizes[si];
    if (size < 1 || size > data.candidates.size()) {
      throw std::invalid_argument("ranking size " + std::to_string(size) +
                                  " outside the dataset");
    }
    const auto top = full_center.order().subspan(0, size);
    Exp3Instance inst{data.candidates.subset(top), data.sex_age.subset(top),
                      data.housing.subset(top),
                      FairnessSpec::proportional(data.sex_age.subset(top)),
                      FairnessSpec::proportional(data.housing.subset(top)),
                      {}};
    if (manifest.alpha) {
      inst.sex_age_spec = FairnessSpec::make(*manifest.alpha, *manifest.beta);
    }
    for (std::size_t i = 0; i < size; ++i) inst.ids.push_back(inst.set[i].id);
    const Ranking input = ranking_from_scores(inst.set);
    const std::vector<double> scores = inst.set.scores();
    const SelectionCriterion criterion = exp3_criterion(manifest, inst);

    for (std::size_t gi = 0; gi < manifest.sigmas.size(); ++gi) {
      const double sigma = manifest.sigmas[gi];
      for (std::size_t ti = 0; ti < manifest.thetas.size(); ++ti) {
        const double theta = manifest.thetas[ti];
        for (std::size_t ai = 0; ai < algorithms.size(); ++ai) {
          const std::string& algo = algorithms[ai];
          std::vector<double> pf_sa, pf_h, nd;
          std::size_t infeasible = 0;
          for (std::size_t rep = 0; rep < manifest.repetitions; ++rep) {
            const std::uint64_t seed = derive_seed(
                manifest.seed, {kExp3, kNoise, si, gi, ti, ai, rep});
            Trial trial;
            try {
              if (algo == "ilp") {
                PrefixBounds bounds =
                    PrefixBounds::from_spec(inst.sex_age_spec, size);
                ConstraintNoise noise(
                    {sigma, seed, NoiseSpec::Scheme::kIlpBounds});
                noise.perturb_ilp_bounds(bounds);
                trial.ranking = exact_fair_dcg(inst.set, inst.sex_age, bounds).ranking;
              } else if (algo == "det-const-sort") {
                ConstraintNoise noise(
                    {sigma, seed, NoiseSpec::Scheme::kDcsMinCounts});
                DetConstSortOptions options;
                if (sigma > 0.0) {
                  options.min_counts = noisy_min_counts(inst.sex_age_spec, noise);
                  options.exhaustion = noisy_exhaustion;
                }
                trial.ranking = det_const_sort(inst.set, inst.sex_age,
                                               inst.sex_age_spec, options)
                                    .ranking;
              } else if (algo == "approx-multi-valued-ipf") {
                ConstraintNoise noise(
                    {sigma, seed, NoiseSpec::Scheme::kIpfWeights});
                trial.ranking =
                    approx_multi_valued_ipf(input, inst.sex_age,
                                            inst.sex_age_spec,
                                            sigma > 0.0 ? ipf_weight_noise(noise)
                                                        : WeightTransform{})
                        .ranking;
              } else {
                const std::size_t m = std::stoul(algo.substr(8));
                trial.ranking = noisy_ranking(inst.set, inst.sex_age,
                                              inst.sex_age_spec, m, criterion,
                                              theta, seed)
                                    .ranking;
              }
              trial.feasible = true;
            } catch (const InfeasibleError& e) {
              trial.error = e.what();
            }
            json log = {{"size", size},   {"theta", theta},
                        {"sigma", sigma}, {"algorithm", algo},
                        {"rep", rep},     {"feasible", trial.feasible}};
            if (trial.feasible) {
              const double a = ppfair(trial.ranking, inst.sex_age, inst.sex_age_spec);
              const double h = ppfair(trial.ranking, inst.housing, inst.housing_spec);
              const double q = ndcg(trial.ranking, scores);
              pf_sa.push_back(a);
              pf_h.push_back(h);
              nd.push_back(q);
              std::vector<std::string> ids;
              for (std::size_t c : trial.ranking.order()) ids.push_back(inst.ids[c]);
              log["ppfair_sexage"] = a;
              log["ppfair_housing"] = h;
              log["ndcg"] = q;
              log["ranking"] = ids;
            } else {
              ++infeasible;
              log["error"] = trial.error;
            }
            if (manifest.write_raw) result.raw.push_back(std::move(log));
          }

          auto tag = [&](ResultRow row) {
            row.size = static_cast<double>(size);
            row.theta = theta;
            row.sigma = sigma;
            return row;
          };
          const double fails = static_cast<double>(infeasible);
          for (std::size_t t = 0; t < 3; ++t) {
            result.tables[t].rows.push_back(tag(make_row(
                manifest.experiment, algo, "infeasible_trials",
                {fails, fails, fails, 0})));
          }
          if (nd.empty()) continue;
          auto boot = [&](const std::vector<double>& v, Statistic s,
                          std::uint64_t metric) {
            return bootstrap_ci(v, s, manifest.bootstrap_resamples,
                                derive_seed(manifest.seed, {kExp3, kBootstrap, si,
                                                            gi, ti, ai, metric}));
          };
          result.tables[0].rows.push_back(tag(make_row(
              manifest.experiment, algo, "ppfair", boot(pf_sa, Statistic::kMedian, 0))));
          result.tables[1].rows.push_back(tag(make_row(
              manifest.experiment, algo, "ppfair", boot(pf_h, Statistic::kMedian, 1))));
          result.tables[2].rows.push_back(tag(make_row(
              manifest.experiment, algo, "ndcg", boot(nd, Statistic::kMean, 2))));
          const double mu = mean(nd);
          const double sd = standard_deviation(nd);
          result.tables[2].rows.push_back(tag(make_row(
              manifest.experiment, algo, "ndcg_sd", {sd, mu - sd, mu + sd, 0})));
        }
      }
    }
  }
  return result;
}

ExperimentResult run_exp3(const ExperimentManifest& manifest) {
  return run_exp3(manifest,
                  ingest_german_credit(manifest.dataset, manifest.dataset_format));
}

ExperimentResult run_experiment(const ExperimentManifest& manifest) {
  if (manifest.experiment == "exp1-ii") return run_exp1(manifest);
  if (manifest.experiment == "exp2-ndcg") return run_exp2(manifest);
  if (manifest.experiment == "exp3-german") return run_exp3(manifest);
  throw std::invalid_argument("unknown experiment '" + manifest.experiment + "'");
}

std::string table_csv(const ResultTable& table) {
  std::ostringstream out;
  out << "experiment,size,delta,theta,sigma,center_ii,algorithm,metric,point,"
         "ci_lo,ci_hi\n";
  for (const ResultRow& r : table.rows) {
    out << r.experiment << ',' << optional_csv(r.size) << ','
        << optional_csv(r.delta) << ',' << optional_csv(r.theta) << ','
        << optional_csv(r.sigma) << ',' << optional_csv(r.center_ii) << ','
        << r.algorithm << ',' << r.metric << ',' << format_double(r.point)
        << ',' << format_double(r.ci_lo) << ',' << format_double(r.ci_hi)
        << '\n';
  }
  return out.str();
}

json table_json(const ResultTable& table) {
  json rows = json::array();
  for (const ResultRow& r : table.rows) {
    rows.push_back({{"experiment", r.experiment},
                    {"size", optional_json(r.size)},
                    {"delta", optional_json(r.delta)},
                    {"theta", optional_json(r.theta)},
                    {"sigma", optional_json(r.sigma)},
                    {"center_ii", optional_json(r.center_ii)},
                    {"algorithm", r.algorithm},
                    {"metric", r.metric},
                    {"point", r.point},
                    {"ci_lo", r.ci_lo},
                    {"ci_hi", r.ci_hi}});
  }
  return {{"table", table.name}, {"rows", rows}};
}

void write_result(const ExperimentResult& result,
                  const ExperimentManifest& manifest, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto open = [&](const std::string& name) {
    std::ofstream out(fs::path(dir) / name, std::ios::binary);
    if (!out) throw DataError("cannot write '" + (fs::path(dir) / name).string() + "'");
    return out;
  };
  for (const ResultTable& t : result.tables) {
    open(t.name + ".csv") << table_csv(t);
    open(t.name + ".json") << table_json(t).dump(2) << '\n';
  }
  if (manifest.write_raw) {
    auto raw = open(result.experiment + "_raw.jsonl");
    for (const json& line : result.raw) raw << line.dump() << '\n';
  }
  open("run_info.json") << json{{"experiment", result.experiment},
                                {"manifest_hash", manifest.hash()},
                                {"manifest", manifest.to_json()}}
                               .dump(2)
                        << '\n';
}

}  // namespace fairrank

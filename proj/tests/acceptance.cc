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

// Acceptance checks: one PASS/FAIL line per criterion.
//
//   fairrank_acceptance [--data PATH] [--allow-fail N]...
//
// Exits 0 when every criterion passes or is listed with --allow-fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fairrank/constraint_noise.h"
#include "fairrank/errors.h"
#include "fairrank/experiments.h"
#include "fairrank/fair_rankers.h"
#include "fairrank/german_credit.h"
#include "fairrank/mallows.h"
#include "fairrank/metrics.h"
#include "fairrank/random.h"
#include "oracle.h"
#include "test_support.h"

namespace fairrank {
namespace {

using nlohmann::json;
using testing::random_instance;
using testing::random_spec;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

bool keeps_group_order(const Ranking& out, const Ranking& reference,
                       const GroupAssignment& groups) {
  std::vector<std::vector<std::size_t>> a(groups.num_groups()),
      b(groups.num_groups());
  for (std::size_t c : out.order()) a[groups.group_of(c)].push_back(c);
  for (std::size_t c : reference.order()) b[groups.group_of(c)].push_back(c);
  return a == b;
}

Verdict dataset_fidelity(const std::string& path) {
  const GermanCreditData data = ingest_german_credit(path);
  const GroupTable t = group_table(data);
  const std::map<std::pair<std::string, std::string>, std::size_t> expected = {
      {{"<35-female", "free"}, 2},   {{"<35-female", "own"}, 131},
      {{"<35-female", "rent"}, 80},  {{"<35-male", "free"}, 23},
      {{"<35-male", "own"}, 261},    {{"<35-male", "rent"}, 51},
      {{">=35-female", "free"}, 17}, {{">=35-female", "own"}, 65},
      {{">=35-female", "rent"}, 15}, {{">=35-male", "free"}, 66},
      {{">=35-male", "own"}, 256},   {{">=35-male", "rent"}, 33}};
  std::size_t mismatches = 0, total = 0, older_women = 0;
  std::map<std::string, std::size_t> housing;
  for (const auto& [cell, n] : expected) {
    const auto it = t.find(cell);
    mismatches += it == t.end() || it->second != n;
  }
  for (const auto& [cell, n] : t) {
    total += n;
    housing[cell.second] += n;
    if (cell.first == ">=35-female") older_women += n;
  }
  const bool ok = mismatches == 0 && t.size() == 12 && total == 1000 &&
                  older_women == 97 && housing["free"] == 108 &&
                  housing["own"] == 713 && housing["rent"] == 179 &&
                  data.records.size() == 1000;
  return {ok, std::to_string(12 - mismatches) + "/12 cells match, total " +
                  std::to_string(total) + ", housing " +
                  std::to_string(housing["free"]) + "/" +
                  std::to_string(housing["own"]) + "/" +
                  std::to_string(housing["rent"])};
}

Verdict sampler_correctness() {
  double worst_tv = 0.0;
  for (double theta : {0.5, 1.0}) {
    const MallowsParams params{Ranking({2, 0, 3, 1}), theta};
    const auto exact = oracle::exact_mallows_distribution(params);
    Rng rng = make_stream(7001, {static_cast<std::uint64_t>(theta * 100)});
    std::map<std::vector<std::size_t>, double> freq;
    const int draws = 200000;
    for (int i = 0; i < draws; ++i) {
      const Ranking r = sample(params, rng);
      freq[{r.order().begin(), r.order().end()}] += 1.0;
    }
    double tv = 0.0;
    for (const auto& [order, p] : exact) {
      tv += std::abs(p - freq[order] / draws);
      freq.erase(order);
    }
    for (const auto& [order, f] : freq) tv += f / draws;
    worst_tv = std::max(worst_tv, tv / 2.0);
  }
  double worst_rel = 0.0;
  for (std::size_t k = 1; k <= 6; ++k) {
    for (double theta : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
      const double z = normalization_constant(k, theta);
      const double e = oracle::enumerated_normalization_constant(k, theta);
      worst_rel = std::max(worst_rel, std::abs(z - e) / e);
    }
  }
  return {worst_tv < 0.01 && worst_rel < 1e-12,
          "max TV " + fmt(worst_tv) + " (< 0.01), max Z rel err " +
              fmt(worst_rel) + " (< 1e-12)"};
}

Verdict optimizer_exactness() {
  double worst = 0.0;
  std::size_t instances = 0;
  const std::vector<std::pair<std::size_t, std::size_t>> shapes = {
      {6, 2}, {8, 2}, {8, 3}};
  for (const auto& [n, g] : shapes) {
    Rng rng = make_stream(7003, {n, g});
    for (int trial = 0; trial < 100; ++trial) {
      const auto inst = random_instance(n, g, rng);
      const FairnessSpec spec = random_spec(inst.groups, rng, 0.15);
      const double fast =
          exact_fair_dcg(inst.set, inst.groups, spec).diagnostics.at("dcg");
      const double brute = oracle::brute_force_optimum(
                               inst.set, inst.groups, spec,
                               oracle::Objective::kMaxDcg)
                               .value;
      worst = std::max(worst, std::abs(fast - brute));
      ++instances;
    }
  }
  return {worst <= 1e-9, std::to_string(instances) +
                             " instances, max |DCG diff| " + fmt(worst)};
}

Verdict baseline_postconditions() {
  Rng rng = make_stream(7004, {});
  std::uniform_int_distribution<std::size_t> size(2, 30);
  std::uniform_int_distribution<std::size_t> groups(2, 4);
  std::size_t dcs_violations = 0, ipf_unfair = 0, ipf_order = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = size(rng);
    const auto inst = random_instance(n, std::min(groups(rng), n), rng);
    const FairnessSpec spec = random_spec(inst.groups, rng);
    const RankerOutput dcs = det_const_sort(inst.set, inst.groups, spec);
    const MinCountProvider mins = default_min_counts(spec);
    for (std::size_t l = 1; l <= n; ++l) {
      const auto counts = group_counts_in_prefix(dcs.ranking, inst.groups, l);
      const auto need = mins(l);
      for (std::size_t p = 0; p < counts.size(); ++p) {
        dcs_violations += static_cast<double>(counts[p]) < need[p];
      }
    }
    const Ranking input = testing::random_ranking(n, rng);
    const RankerOutput ipf = approx_multi_valued_ipf(input, inst.groups, spec);
    ipf_unfair += !is_fair(ipf.ranking, inst.groups, spec);
    ipf_order += !keeps_group_order(ipf.ranking, input, inst.groups);
  }
  return {dcs_violations + ipf_unfair + ipf_order == 0,
          "1000 instances: det-const-sort min-count violations " +
              std::to_string(dcs_violations) + ", ipf unfair " +
              std::to_string(ipf_unfair) + ", ipf order breaks " +
              std::to_string(ipf_order)};
}

Verdict experiment1() {
  const ExperimentManifest m = ExperimentManifest::defaults("exp1-ii");
  const ExperimentResult r = run_exp1(m);
  const ResultTable& t = r.table("exp1_sample_ii");
  double worst = 0.0, max_ii = -1.0;
  for (const ResultRow* row : t.select("sample_ii", "mallows", 5.0)) {
    worst = std::max(worst, std::abs(row->point - *row->center_ii));
    max_ii = std::max(max_ii, *row->center_ii);
  }
  double drop = std::numeric_limits<double>::infinity();
  for (const ResultRow* row : t.select("sample_ii", "mallows", 0.1)) {
    if (*row->center_ii == max_ii) drop = std::min(drop, *row->center_ii - row->point);
  }
  return {worst <= 0.1 && drop >= 1.0,
          "max |II(theta=5) - center| " + fmt(worst) +
              " (<= 0.1), drop at theta=0.1 for II=" + fmt(max_ii) +
              " centers " + fmt(drop) + " (>= 1)"};
}

Verdict experiment2() {
  const ExperimentManifest m = ExperimentManifest::defaults("exp2-ndcg");
  const ExperimentResult r = run_exp2(m);
  const ResultTable& t = r.table("exp2_sample_ndcg");
  const std::vector<double> thetas = {0.1, 0.5, 1.0, 2.0, 5.0};
  bool ok = true;
  double lowest_top = 1.0;
  std::size_t breaks = 0;
  for (double delta : {0.0, 0.5, 1.0}) {
    for (std::size_t i = 0; i + 1 < thetas.size(); ++i) {
      const auto a = t.select("sample_ndcg", "mallows", thetas[i], {}, {}, delta);
      const auto b =
          t.select("sample_ndcg", "mallows", thetas[i + 1], {}, {}, delta);
      if (a.size() != 1 || b.size() != 1) return {false, "missing grid cell"};
      if (b[0]->ci_hi < a[0]->ci_lo) ++breaks;
    }
    const auto top = t.select("sample_ndcg", "mallows", 5.0, {}, {}, delta);
    lowest_top = std::min(lowest_top, top[0]->point);
  }
  ok = breaks == 0 && lowest_top > 0.99;
  return {ok, "monotonicity breaks beyond CI overlap " + std::to_string(breaks) +
                  ", min mean NDCG at theta=5 " + fmt(lowest_top) + " (> 0.99)"};
}

Verdict experiment3(const std::string& path) {
  ExperimentManifest m = ExperimentManifest::defaults("exp3-german");
  m.dataset = path;
  const ExperimentResult r = run_exp3(m);

  using Key = std::tuple<double, double, double, std::size_t>;
  std::map<Key, std::map<std::string, json>> trials;
  for (const json& line : r.raw) {
    trials[{line["size"].get<double>(), line["theta"].get<double>(),
            line["sigma"].get<double>(), line["rep"].get<std::size_t>()}]
          [line["algorithm"].get<std::string>()] = line;
  }

  // (a)
  std::size_t unfair_ilp = 0, ilp_trials = 0;
  for (const auto& [key, algos] : trials) {
    if (std::get<2>(key) != 0.0) continue;
    const json& ilp = algos.at("ilp");
    ++ilp_trials;
    unfair_ilp += !ilp["feasible"].get<bool>() ||
                  ilp["ppfair_sexage"].get<double>() != 100.0;
  }
  const bool a = unfair_ilp == 0;

  // (b)
  std::size_t beaten = 0, beaten_fair = 0, compared = 0;
  double worst_excess = 0.0;
  std::map<std::string, std::size_t> beaten_by;
  for (const auto& [key, algos] : trials) {
    const json& ilp = algos.at("ilp");
    if (!ilp["feasible"].get<bool>()) continue;
    const double best = ilp["ndcg"].get<double>();
    for (const auto& [algo, line] : algos) {
      if (algo == "ilp" || !line["feasible"].get<bool>()) continue;
      ++compared;
      const double v = line["ndcg"].get<double>();
      if (v > best) {
        ++beaten;
        ++beaten_by[algo];
        worst_excess = std::max(worst_excess, v - best);
        beaten_fair += std::get<2>(key) == 0.0 &&
                       line["ppfair_sexage"].get<double>() == 100.0;
      }
    }
  }
  const bool b = beaten == 0;

  // (c)
  double single = 0, best15 = 0;
  std::size_t paired = 0;
  for (const auto& [key, algos] : trials) {
    const json& one = algos.at("mallows-1");
    const json& fifteen = algos.at("mallows-15");
    if (!one["feasible"].get<bool>() || !fifteen["feasible"].get<bool>()) continue;
    single += one["ndcg"].get<double>();
    best15 += fifteen["ndcg"].get<double>();
    ++paired;
  }
  const bool c = paired > 0 && best15 >= single;

  // (d)
  const ResultTable& nd = r.table("exp3_ndcg");
  std::size_t d_breaks = 0;
  std::string gaps;
  for (double sigma : m.sigmas) {
    for (double theta : m.thetas) {
      std::vector<double> gap, half;
      for (double size : {10.0, 50.0, 100.0}) {
        const auto ilp = nd.select("ndcg", "ilp", theta, sigma, size);
        const auto mal = nd.select("ndcg", "mallows-15", theta, sigma, size);
        if (ilp.size() != 1 || mal.size() != 1) return {false, "missing exp3 cell"};
        gap.push_back(ilp[0]->point - mal[0]->point);
        half.push_back((ilp[0]->ci_hi - ilp[0]->ci_lo) / 2 +
                       (mal[0]->ci_hi - mal[0]->ci_lo) / 2);
      }
      for (std::size_t i = 0; i + 1 < gap.size(); ++i) {
        if (gap[i + 1] > gap[i] + half[i] + half[i + 1]) ++d_breaks;
      }
      gaps += " [s=" + fmt(sigma) + ",t=" + fmt(theta) + ": " + fmt(gap[0]) +
              " " + fmt(gap[1]) + " " + fmt(gap[2]) + "]";
    }
  }
  const bool d = d_breaks == 0;

  std::string by;
  for (const auto& [algo, n] : beaten_by) by += " " + algo + "=" + std::to_string(n);
  std::ostringstream detail;
  detail << "(a) " << (a ? "ok" : "FAIL") << " unfair vanilla ilp " << unfair_ilp
         << "/" << ilp_trials << "; (b) " << (b ? "ok" : "FAIL") << " "
         << beaten << "/" << compared << " outputs above ilp NDCG (max excess "
         << fmt(worst_excess) << ";" << by << "; of the sigma=0 ones, "
         << beaten_fair << " satisfy the sex-age bounds); (c) "
         << (c ? "ok" : "FAIL") << " best-of-15 " << fmt(best15 / paired)
         << " vs single " << fmt(single / paired) << "; (d) "
         << (d ? "ok" : "FAIL") << " gap 10/50/100" << gaps;
  return {a && b && c && d, detail.str()};
}

Verdict noise_sanity() {
  Rng rng = make_stream(7008, {});
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(20, 2 + trial % 3, rng);
    const FairnessSpec spec = random_spec(inst.groups, rng);
    const std::uint64_t seed = static_cast<std::uint64_t>(trial);

    ConstraintNoise ilp({0.0, seed, NoiseSpec::Scheme::kIlpBounds});
    PrefixBounds bounds = PrefixBounds::from_spec(spec, 20);
    ilp.perturb_ilp_bounds(bounds);
    mismatches += exact_fair_dcg(inst.set, inst.groups, bounds).ranking !=
                  exact_fair_dcg(inst.set, inst.groups, spec).ranking;

    ConstraintNoise dcs({0.0, seed, NoiseSpec::Scheme::kDcsMinCounts});
    DetConstSortOptions options;
    options.min_counts = noisy_min_counts(spec, dcs);
    mismatches += det_const_sort(inst.set, inst.groups, spec, options).ranking !=
                  det_const_sort(inst.set, inst.groups, spec).ranking;

    ConstraintNoise ipf({0.0, seed, NoiseSpec::Scheme::kIpfWeights});
    const Ranking input = testing::random_ranking(20, rng);
    mismatches +=
        approx_multi_valued_ipf(input, inst.groups, spec, ipf_weight_noise(ipf))
            .ranking != approx_multi_valued_ipf(input, inst.groups, spec).ranking;
  }
  const auto inst = random_instance(24, 3, rng);
  const FairnessSpec spec = FairnessSpec::proportional(inst.groups);
  std::size_t infeasible = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    ConstraintNoise noise({1.0, seed, NoiseSpec::Scheme::kIlpBounds});
    PrefixBounds bounds = PrefixBounds::from_spec(spec, 24);
    noise.perturb_ilp_bounds(bounds);
    try {
      exact_fair_dcg(inst.set, inst.groups, bounds);
    } catch (const InfeasibleError&) {
      ++infeasible;
    }
  }
  return {mismatches == 0 && infeasible == 0,
          "sigma=0 mismatches " + std::to_string(mismatches) +
              "/300, perturbed ilp infeasible " + std::to_string(infeasible) +
              "/1000"};
}

Verdict metric_suite() {
  Rng rng = make_stream(7009, {});
  std::size_t kt_mismatch = 0;
  for (int i = 0; i < 1000; ++i) {
    const Ranking a = testing::random_ranking(50, rng);
    const Ranking b = testing::random_ranking(50, rng);
    kt_mismatch += kendall_tau(a, b) != oracle::kendall_tau_pairs(a, b);
  }
  double worst_scale = 0.0;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    std::vector<double> scores(30);
    for (double& s : scores) s = unit(rng);
    const Ranking r = testing::random_ranking(30, rng);
    const double base = ndcg(r, scores);
    for (double factor : {1e-3, 0.5, 7.0, 1e6}) {
      std::vector<double> scaled = scores;
      for (double& s : scaled) s *= factor;
      worst_scale = std::max(worst_scale, std::abs(ndcg(r, scaled) - base));
    }
  }
  std::size_t endpoint_errors = 0;
  for (std::size_t n = 2; n <= 60; ++n) {
    const Ranking r = testing::random_ranking(n, rng);
    const std::vector<std::size_t> rev(r.order().rbegin(), r.order().rend());
    endpoint_errors += kendall_tau_coefficient(r, r) != 1.0;
    endpoint_errors += kendall_tau_coefficient(r, Ranking(rev)) != -1.0;
  }
  return {kt_mismatch == 0 && worst_scale <= 1e-12 && endpoint_errors == 0,
          "kt mismatches " + std::to_string(kt_mismatch) +
              "/1000, max NDCG rescale diff " + fmt(worst_scale) +
              ", tau endpoint errors " + std::to_string(endpoint_errors)};
}

}  // namespace
}  // namespace fairrank

int main(int argc, char** argv) {
  using fairrank::Verdict;
  std::string data = fairrank::testing::source_path("data/german.data");
  std::set<int> allowed;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--data") == 0 && i + 1 < argc) {
      data = argv[++i];
    } else if (std::strcmp(argv[i], "--allow-fail") == 0 && i + 1 < argc) {
      allowed.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--data PATH] [--allow-fail N]...\n",
                   argv[0]);
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "dataset fidelity", 5, [&] { return fairrank::dataset_fidelity(data); }},
      {2, "sampler correctness", 60, fairrank::sampler_correctness},
      {3, "optimizer exactness", 120, fairrank::optimizer_exactness},
      {4, "baseline post-conditions", 0, fairrank::baseline_postconditions},
      {5, "experiment 1 trend", 120, fairrank::experiment1},
      {6, "experiment 2 trend", 120, fairrank::experiment2},
      {7, "experiment 3 reproduction", 900,
       [&] { return fairrank::experiment3(data); }},
      {8, "noise-scheme sanity", 0, fairrank::noise_sanity},
      {9, "metric suite vs oracles", 0, fairrank::metric_suite},
  };

  int failures = 0, tolerated = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      v.pass = false;
      v.detail += "; over time budget";
    }
    std::printf("%s [%d] %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", c.id,
                c.name, v.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!v.pass) (allowed.count(c.id) ? tolerated : failures)++;
  }
  if (tolerated > 0) {
    std::printf("%d failing criterion(s) tolerated via --allow-fail\n", tolerated);
  }
  return failures == 0 ? 0 : 1;
}

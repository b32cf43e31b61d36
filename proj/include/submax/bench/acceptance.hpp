// Copyright 2026 The Authors.
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

// End-to-end acceptance suite: thirteen criteria covering the solver
// guarantees, the reweighting-loop inequalities, estimator and rounding
// statistics, generator statistics, and benchmark determinism. Each
// criterion prints one pass/fail line. The fast level shrinks trial
// counts five-fold where that keeps the statistical bands valid.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "submax/bench/config.hpp"
#include "submax/bench/runner.hpp"
#include "submax/generators.hpp"
#include "submax/kronecker.hpp"
#include "submax/multilinear.hpp"
#include "submax/multiobjective.hpp"
#include "submax/oracles.hpp"
#include "submax/rng.hpp"
#include "submax/solvers.hpp"

namespace submax::accept {

struct Options {
  bool fast = false;
  int jobs = 1;
  std::uint64_t master_seed = 0x5EEDACCE;
  // Scratch space for the determinism criterion; empty picks a directory
  // under the system temp path.
  std::filesystem::path work_dir;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline int scaled(const Options& opts, int full) {
  return opts.fast ? std::max(1, full / 5) : full;
}

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

// Shared fixture for the reweighting-loop criteria: guarantee-mode runs on
// planted-feasible instances, half with m = 4 and half with m = 10.
struct PlantedRun {
  MultiObjectiveInstance instance;
  MwuTrace trace;
};

inline std::vector<PlantedRun> planted_runs(const Options& opts) {
  std::vector<PlantedRun> runs;
  const int count = detail::scaled(opts, 20);
  for (int i = 0; i < count; ++i) {
    const int m = i % 2 == 0 ? 4 : 10;
    PlantedInstance planted = planted_instance(
        64, m, 8, rng::derive(opts.master_seed, "planted", static_cast<std::uint64_t>(i)));
    MwuConfig cfg = guarantee_mode();
    cfg.delta = 0.2;
    PlantedRun run;
    run.instance = std::move(planted.instance);
    solve_p2(run.instance, cfg, rng::derive(opts.master_seed, "planted-run", static_cast<std::uint64_t>(i)),
             &run.trace);
    runs.push_back(std::move(run));
  }
  return runs;
}

}  // namespace detail

// 1. Greedy reaches (1 - 1/e) OPT on brute-forceable instances.
inline CriterionResult criterion_greedy_guarantee(const Options& opts) {
  CriterionResult r{1, "single-objective greedy guarantee", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const int count = detail::scaled(opts, 50);
  const double floor_factor = beta(1.0);
  double worst = 2.0;
  rng::Stream params(rng::derive(opts.master_seed, "c1-params"));
  for (int i = 0; i < count && r.passed; ++i) {
    const int n = 8 + static_cast<int>(params.next_below(9));       // 8..16
    const int k = 1 + static_cast<int>(params.next_below(4));       // 1..4
    const int universe = 8 + static_cast<int>(params.next_below(13));
    const MultiObjectiveInstance inst = random_coverage_instance(
        n, 1, k, universe, 1, 3, rng::derive(opts.master_seed, "c1", static_cast<std::uint64_t>(i)));
    const BruteForceResult opt = brute_force_p1(inst);
    const ElementSet greedy = standard_greedy(*inst.objectives[0], k);
    const double val = inst.objectives[0]->eval(greedy);
    if (opt.value > 0.0) worst = std::min(worst, val / opt.value);
    if (val < floor_factor * opt.value - kValueTolerance) {
      r.passed = false;
      r.detail = "instance " + std::to_string(i) + ": greedy " +
                 detail::fmt(val) + " < floor " +
                 detail::fmt(floor_factor * opt.value);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  if (r.passed && r.seconds >= 10.0) {
    r.passed = false;
    r.detail = "runtime budget exceeded";
  }
  if (r.passed)
    r.detail = std::to_string(count) + " instances, worst ratio " +
               detail::fmt(worst) + " vs floor " + detail::fmt(floor_factor);
  return r;
}

// 2. Lazy greedy returns the same set with no more queries, fewer on most.
inline CriterionResult criterion_lazy_equivalence(const Options& opts) {
  CriterionResult r{2, "lazy greedy equivalence and query savings", true, "",
                    0.0};
  const auto started = std::chrono::steady_clock::now();
  const int count = detail::scaled(opts, 100);
  int strictly_less = 0;
  rng::Stream params(rng::derive(opts.master_seed, "c2-params"));
  for (int i = 0; i < count && r.passed; ++i) {
    const int n = 12 + static_cast<int>(params.next_below(29));  // 12..40
    const int k = 2 + static_cast<int>(params.next_below(7));    // 2..8
    const MultiObjectiveInstance inst = random_coverage_instance(
        n, 1, k, n, 1, 3, rng::derive(opts.master_seed, "c2", static_cast<std::uint64_t>(i)));
    const ValueOracle& f = *inst.objectives[0];
    f.reset_query_count();
    const ElementSet standard = standard_greedy(f, k);
    const std::uint64_t standard_queries = f.query_count();
    f.reset_query_count();
    const ElementSet lazy = lazy_greedy(f, k);
    const std::uint64_t lazy_queries = f.query_count();
    if (!(standard == lazy)) {
      r.passed = false;
      r.detail = "instance " + std::to_string(i) + ": set mismatch";
    } else if (lazy_queries > standard_queries) {
      r.passed = false;
      r.detail = "instance " + std::to_string(i) + ": lazy used more queries";
    } else if (lazy_queries < standard_queries) {
      ++strictly_less;
    }
  }
  if (r.passed && strictly_less * 10 < count * 9) {
    r.passed = false;
    r.detail = "strict savings on only " + std::to_string(strictly_less) +
               " of " + std::to_string(count);
  }
  if (r.passed)
    r.detail = std::to_string(count) + " instances, strict savings on " +
               std::to_string(strictly_less);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 3. Threshold greedy stays inside its query budget.
inline CriterionResult criterion_threshold_queries(const Options& opts) {
  CriterionResult r{3, "threshold greedy query bound", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const double dp = 0.2;
  std::string seen;
  for (const int n : {64, 256, 1024}) {
    std::vector<double> weights(static_cast<std::size_t>(n));
    rng::Stream stream(rng::derive(opts.master_seed, "c3", static_cast<std::uint64_t>(n)));
    for (double& w : weights) w = stream.next_double();
    const ModularFunction f(std::move(weights));
    f.reset_query_count();
    threshold_greedy(f, 8, dp);
    const double bound =
        3.0 * (static_cast<double>(n) / dp) * std::log(static_cast<double>(n) / dp);
    seen += (seen.empty() ? "" : ", ") + std::to_string(n) + ": " +
            std::to_string(f.query_count()) + " <= " +
            std::to_string(static_cast<long long>(bound));
    if (static_cast<double>(f.query_count()) > bound) {
      r.passed = false;
      r.detail = "n = " + std::to_string(n) + " exceeded budget";
      break;
    }
  }
  if (r.passed) r.detail = seen;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 4. Every reweighting round solves its weighted problem well enough:
// g^t(X^t) >= alpha (k1/k) sum_i lambda_i^t.
inline CriterionResult criterion_round_quality(
    const Options& opts, const std::vector<detail::PlantedRun>& runs) {
  CriterionResult r{4, "per-round weighted-solve quality", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  int rounds_checked = 0;
  double slack = 1e18;
  for (std::size_t i = 0; i < runs.size() && r.passed; ++i) {
    const MwuTrace& trace = runs[i].trace;
    const double share = static_cast<double>(trace.stage2_k) /
                         static_cast<double>(runs[i].instance.k);
    for (const MwuRound& round : trace.rounds) {
      double g_value = 0.0;
      for (std::size_t j = 0; j < round.weights.size(); ++j)
        g_value += round.weights[j] * (round.costs[j] + trace.alpha);
      const double floor_val = trace.alpha * share * round.potential;
      slack = std::min(slack, g_value - floor_val);
      ++rounds_checked;
      if (g_value < floor_val - 1e-9) {
        r.passed = false;
        r.detail = "run " + std::to_string(i) + ": g(X) " +
                   detail::fmt(g_value) + " < " + detail::fmt(floor_val);
        break;
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(rounds_checked) + " rounds, min slack " +
               detail::fmt(slack);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 5. Average residual value per objective beats (k1/k)(1 - 1/e) - delta.
inline CriterionResult criterion_average_guarantee(
    const Options& opts, const std::vector<detail::PlantedRun>& runs) {
  CriterionResult r{5, "average residual guarantee per objective", true, "",
                    0.0};
  const auto started = std::chrono::steady_clock::now();
  double slack = 1e18;
  for (std::size_t i = 0; i < runs.size() && r.passed; ++i) {
    const MwuTrace& trace = runs[i].trace;
    if (trace.rounds.empty()) continue;
    const double share = static_cast<double>(trace.stage2_k) /
                         static_cast<double>(runs[i].instance.k);
    const double floor_val = share * beta(1.0) - trace.delta;
    for (int obj : trace.active) {
      double avg = 0.0;
      for (const MwuRound& round : trace.rounds)
        avg += round.costs[static_cast<std::size_t>(obj)] + trace.alpha;
      avg /= static_cast<double>(trace.rounds.size());
      slack = std::min(slack, avg - floor_val);
      if (avg < floor_val - 1e-9) {
        r.passed = false;
        r.detail = "run " + std::to_string(i) + " objective " +
                   std::to_string(obj) + ": avg " + detail::fmt(avg) + " < " +
                   detail::fmt(floor_val);
        break;
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(runs.size()) + " runs, min slack " +
               detail::fmt(slack);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 6. The extension at the averaged trajectory dominates (1 - 1/e) times
// the average set value, per objective, within Monte-Carlo noise.
inline CriterionResult criterion_extension_at_average(
    const Options& opts, const std::vector<detail::PlantedRun>& runs) {
  CriterionResult r{6, "extension value at averaged trajectory", true, "",
                    0.0};
  const auto started = std::chrono::steady_clock::now();
  const int samples = opts.fast ? 20000 : 100000;
  double slack = 1e18;
  for (std::size_t i = 0; i < runs.size() && r.passed; ++i) {
    const MwuTrace& trace = runs[i].trace;
    if (!trace.average) continue;
    const FractionalPoint xbar = trace.average->marginals();
    for (std::size_t j = 0; j < trace.active.size(); ++j) {
      const int obj = trace.active[j];
      double avg = 0.0;
      for (const MwuRound& round : trace.rounds)
        avg += round.costs[static_cast<std::size_t>(obj)] + trace.alpha;
      avg /= static_cast<double>(trace.rounds.size());
      EstimatorConfig cfg;
      cfg.samples = samples;
      cfg.rng_seed = rng::derive(opts.master_seed, "c6", i, static_cast<std::uint64_t>(obj));
      const Estimate est = estimate_F(*trace.residuals[j], xbar, cfg);
      const double floor_val =
          beta(1.0) * avg - 3.0 * est.std_error - kValueTolerance;
      slack = std::min(slack, est.mean - floor_val);
      if (est.mean < floor_val) {
        r.passed = false;
        r.detail = "run " + std::to_string(i) + " objective " +
                   std::to_string(obj) + ": estimate " + detail::fmt(est.mean) +
                   " < " + detail::fmt(floor_val);
        break;
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(runs.size()) + " traces, " +
               std::to_string(samples) + " samples, min slack " +
               detail::fmt(slack);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 7. Scaling a point toward the origin never loses more than
// proportionally: F(theta x) >= theta F(x) within noise.
inline CriterionResult criterion_concavity(const Options& opts) {
  CriterionResult r{7, "extension concavity along rays", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const int count = detail::scaled(opts, 50);
  const int samples = opts.fast ? 20000 : 100000;
  rng::Stream params(rng::derive(opts.master_seed, "c7-params"));
  for (int i = 0; i < count && r.passed; ++i) {
    const int n = 8 + static_cast<int>(params.next_below(17));  // 8..24
    const MultiObjectiveInstance inst = random_coverage_instance(
        n, 1, 1, n, 1, 3, rng::derive(opts.master_seed, "c7", static_cast<std::uint64_t>(i)));
    std::vector<double> coords(static_cast<std::size_t>(n));
    for (double& c : coords) c = params.next_double();
    const double theta = 0.1 + 0.8 * params.next_double();
    EstimatorConfig cfg;
    cfg.samples = samples;
    cfg.rng_seed = rng::derive(opts.master_seed, "c7-est", static_cast<std::uint64_t>(i));
    if (!concavity_check(*inst.objectives[0], FractionalPoint(std::move(coords)),
                         theta, cfg)) {
      r.passed = false;
      r.detail = "triple " + std::to_string(i) + " failed";
    }
  }
  if (r.passed)
    r.detail = std::to_string(count) + " triples, " +
               std::to_string(samples) + " samples";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 8. Swap rounding preserves inclusion marginals and base size. The trial
// count stays at 10^4 in fast mode; the +-0.03 band needs it.
inline CriterionResult criterion_swap_marginals(const Options& opts) {
  CriterionResult r{8, "swap rounding marginals", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const int n = 20, base_size = 6, seeds = 10000;
  std::vector<ElementSet> bases;
  for (int t = 0; t < 5; ++t) {
    ElementSet b(n);
    for (int j = 0; j < base_size; ++j) b.add((t * 3 + j * 2) % n);
    if (b.size() != base_size) {
      // The stride pattern collides for some t; fill deterministically.
      for (int e = 0; e < n && b.size() < base_size; ++e) b.add(e);
    }
    bases.push_back(std::move(b));
  }
  const ConvexCombination comb(bases, {0.3, 0.25, 0.2, 0.15, 0.1});
  const FractionalPoint expected = comb.marginals();
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (int s = 0; s < seeds; ++s) {
    const ElementSet out =
        swap_round(comb, rng::derive(opts.master_seed, "c8", static_cast<std::uint64_t>(s)));
    if (out.size() != base_size) {
      r.passed = false;
      r.detail = "seed " + std::to_string(s) + ": size " +
                 std::to_string(out.size());
      break;
    }
    out.for_each([&](int e) { ++hits[static_cast<std::size_t>(e)]; });
  }
  double worst = 0.0;
  if (r.passed) {
    for (int e = 0; e < n; ++e) {
      const double freq =
          static_cast<double>(hits[static_cast<std::size_t>(e)]) / seeds;
      worst = std::max(worst, std::abs(freq - expected[e]));
    }
    if (worst > 0.03) {
      r.passed = false;
      r.detail = "max marginal deviation " + detail::fmt(worst);
    } else {
      r.detail = std::to_string(seeds) + " seeds, max deviation " +
                 detail::fmt(worst);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 9. Subset scaling: some k'-subset of the brute-force optimum keeps a
// (1 - eps)(k'/k) share of every objective.
inline CriterionResult criterion_subset_scaling(const Options& opts) {
  CriterionResult r{9, "subset scaling of optima", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const int count = detail::scaled(opts, 30);
  const int k = 8;
  int checked = 0;
  for (int i = 0; i < count && r.passed; ++i) {
    const int m = 2 + i % 2;
    const MultiObjectiveInstance inst = random_coverage_instance(
        16, m, k, 20, 2, 2, rng::derive(opts.master_seed, "c9", static_cast<std::uint64_t>(i)));
    const BruteForceResult opt = brute_force_p1(inst);
    for (const int kprime : {(k + 1) / 2, (3 * k + 3) / 4}) {
      ++checked;
      if (!verify_lemma9(inst, opt.set, kprime, 0.2).exists) {
        r.passed = false;
        r.detail = "instance " + std::to_string(i) + ", k' = " +
                   std::to_string(kprime) + ": no qualifying subset";
        break;
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(checked) + " (instance, k') pairs";
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 10. Filter postcondition: no remaining element keeps a large capped
// marginal, and the filter set respects the m/eps^3 bound.
inline CriterionResult criterion_filter_postcondition(const Options& opts) {
  CriterionResult r{10, "filter postcondition and size bound", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const int count = detail::scaled(opts, 50);
  const double eps = 0.3;
  rng::Stream params(rng::derive(opts.master_seed, "c10-params"));
  int max_selected = 0;
  for (int i = 0; i < count && r.passed; ++i) {
    const int n = 24 + static_cast<int>(params.next_below(41));  // 24..64
    const int m = 2 + static_cast<int>(params.next_below(3));    // 2..4
    const double target_share = 0.5 + 0.25 * static_cast<double>(params.next_below(3));
    MultiObjectiveInstance inst = random_coverage_instance(
        n, m, std::max(1, n / 2), n, 1, 4,
        rng::derive(opts.master_seed, "c10", static_cast<std::uint64_t>(i)));
    const ElementSet everything = ElementSet::full(n);
    std::vector<double> targets;
    for (const auto& f : inst.objectives)
      targets.push_back(std::max(1.0, target_share * f->eval(everything)));
    inst.targets = std::move(targets);
    const MultiObjectiveInstance capped = capped_copy(inst);
    ElementSet s1(n);
    try {
      s1 = stage1_filter(capped, eps).selected;
    } catch (const Stage1ExhaustedError& e) {
      s1 = e.selected;
    }
    max_selected = std::max(max_selected, s1.size());
    const double size_bound =
        static_cast<double>(m) / (eps * eps * eps);
    if (static_cast<double>(s1.size()) > size_bound) {
      r.passed = false;
      r.detail = "instance " + std::to_string(i) + ": filter kept " +
                 std::to_string(s1.size()) + " > " + detail::fmt(size_bound);
      break;
    }
    for (int e = 0; e < n && r.passed; ++e) {
      if (s1.contains(e)) continue;
      for (int j = 0; j < m; ++j) {
        const double threshold =
            eps * eps * eps * (*capped.targets)[static_cast<std::size_t>(j)];
        if (capped.objectives[static_cast<std::size_t>(j)]->marginal(e, s1) >=
            threshold) {
          r.passed = false;
          r.detail = "instance " + std::to_string(i) + ": element " +
                     std::to_string(e) + " kept a large marginal";
          break;
        }
      }
    }
  }
  if (r.passed)
    r.detail = std::to_string(count) + " instances, largest filter set " +
               std::to_string(max_selected);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 11. Benchmark trend on Kronecker max-cover: the reweighting pipeline
// beats round-robin greedy at every k and saturate at most k.
inline CriterionResult criterion_benchmark_trend(const Options& opts) {
  CriterionResult r{11, "benchmark trend on generated instances", true, "",
                    0.0};
  const auto started = std::chrono::steady_clock::now();
  bench::ExperimentConfig cfg;
  cfg.n = 64;
  cfg.m = 10;
  cfg.k_values = {5, 10, 15, 20};
  cfg.trials = detail::scaled(opts, 30);
  cfg.algorithms = {"mwu", "saturate", "round_robin"};
  cfg.delta = 0.2;
  cfg.search_iters = 12;
  cfg.master_seed = rng::derive(opts.master_seed, "c11");
  const auto records =
      bench::run_experiment(cfg, opts.jobs, bench::InstanceSource::kRegenerate);

  std::map<std::string, std::map<int, double>> means;
  std::map<std::string, std::map<int, int>> counts;
  for (const auto& rec : records) {
    means[rec.algorithm][rec.k] += rec.value;
    counts[rec.algorithm][rec.k] += 1;
  }
  for (auto& [alg, by_k] : means) {
    for (auto& [k, total] : by_k) total /= counts[alg][k];
  }
  int sat_wins = 0;
  std::string detail_str;
  for (const int k : cfg.k_values) {
    const double mwu = means["mwu"][k];
    const double rr = means["round_robin"][k];
    const double sat = means["saturate"][k];
    detail_str += "k=" + std::to_string(k) + " mwu " + detail::fmt(mwu) +
                  " rr " + detail::fmt(rr) + " sat " + detail::fmt(sat) + "; ";
    if (mwu < rr - kValueTolerance) {
      r.passed = false;
      r.detail = "mean mwu below round_robin at k = " + std::to_string(k) +
                 " (" + detail::fmt(mwu) + " vs " + detail::fmt(rr) + ")";
    }
    if (mwu >= sat - kValueTolerance) ++sat_wins;
  }
  if (r.passed && sat_wins * 4 < static_cast<int>(cfg.k_values.size()) * 3) {
    r.passed = false;
    r.detail = "mwu means beat saturate at only " + std::to_string(sat_wins) +
               " of " + std::to_string(cfg.k_values.size()) + " k points";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  if (r.passed && r.seconds >= 900.0) {
    r.passed = false;
    r.detail = "runtime budget exceeded";
  }
  if (r.passed)
    r.detail = detail_str + "saturate beaten at " + std::to_string(sat_wins) +
               "/" + std::to_string(cfg.k_values.size()) + " k points";
  return r;
}

// 12. results.csv bytes are a pure function of (config, master_seed),
// independent of thread count.
inline CriterionResult criterion_run_determinism(const Options& opts) {
  CriterionResult r{12, "benchmark determinism across thread counts", true,
                    "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  std::filesystem::path dir = opts.work_dir;
  if (dir.empty()) {
    dir = std::filesystem::temp_directory_path() /
          ("submax-verify-" + std::to_string(opts.master_seed));
  }
  std::filesystem::create_directories(dir);

  bench::ExperimentConfig cfg;
  cfg.n = 64;
  cfg.m = 3;
  cfg.k_values = {3, 5};
  cfg.trials = 2;
  cfg.algorithms = {"mwu", "round_robin", "saturate"};
  cfg.master_seed = rng::derive(opts.master_seed, "c12");
  cfg.output_dir = (dir / "bench").string();

  std::ostringstream sink;
  bench::cmd_gen(cfg, sink);
  auto read_results = [&]() {
    std::ifstream in(std::filesystem::path(cfg.output_dir) / "results.csv",
                     std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };
  bench::cmd_run(cfg, 1, sink);
  const std::string first = read_results();
  bench::cmd_run(cfg, 1, sink);
  const std::string second = read_results();
  bench::cmd_run(cfg, 8, sink);
  const std::string parallel = read_results();

  if (first.empty()) {
    r.passed = false;
    r.detail = "no CSV produced";
  } else if (first != second) {
    r.passed = false;
    r.detail = "two sequential runs differ";
  } else if (first != parallel) {
    r.passed = false;
    r.detail = "jobs=8 run differs from jobs=1";
  } else {
    r.detail = "3 runs, " + std::to_string(first.size()) + " identical bytes";
  }
  std::filesystem::remove_all(dir);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

// 13. Realized Kronecker edge counts match the exact expectation within 3
// binomial standard deviations on nearly all seeds.
inline CriterionResult criterion_kronecker_statistics(const Options& opts) {
  CriterionResult r{13, "generator edge-count statistics", true, "", 0.0};
  const auto started = std::chrono::steady_clock::now();
  const int runs = 30, power = 6;
  int within = 0;
  for (int s = 0; s < runs; ++s) {
    const Graph g =
        kronecker_generate(power, rng::derive(opts.master_seed, "c13", static_cast<std::uint64_t>(s)));
    const EdgeCountStats stats = kronecker_edge_stats(g.initiator, power);
    const double sigma = std::sqrt(stats.variance);
    const double realized = static_cast<double>(edge_count(g));
    if (std::abs(realized - stats.expected) <= 3.0 * sigma + kValueTolerance)
      ++within;
  }
  if (within < 28) {
    r.passed = false;
    r.detail = "only " + std::to_string(within) + "/30 runs within 3 sigma";
  } else {
    r.detail = std::to_string(within) + "/30 runs within 3 sigma";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            started)
                  .count();
  return r;
}

inline std::vector<CriterionResult> run_all(const Options& opts,
                                            std::ostream* progress = nullptr) {
  std::vector<CriterionResult> results;
  auto emit = [&](CriterionResult r) {
    if (progress != nullptr) {
      char line[512];
      std::snprintf(line, sizeof(line), "criterion %2d: %s  %s (%s) [%.1fs]\n",
                    r.id, r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
      *progress << line << std::flush;
    }
    results.push_back(std::move(r));
  };
  emit(criterion_greedy_guarantee(opts));
  emit(criterion_lazy_equivalence(opts));
  emit(criterion_threshold_queries(opts));
  {
    const std::vector<detail::PlantedRun> runs = detail::planted_runs(opts);
    emit(criterion_round_quality(opts, runs));
    emit(criterion_average_guarantee(opts, runs));
    emit(criterion_extension_at_average(opts, runs));
  }
  emit(criterion_concavity(opts));
  emit(criterion_swap_marginals(opts));
  emit(criterion_subset_scaling(opts));
  emit(criterion_filter_postcondition(opts));
  emit(criterion_benchmark_trend(opts));
  emit(criterion_run_determinism(opts));
  emit(criterion_kronecker_statistics(opts));
  return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

// Runs the suite, printing one line per criterion; returns a process exit
// code (0 pass, 1 any failure).
inline int verify_main(const Options& opts, std::ostream& out) {
  const auto results = run_all(opts, &out);
  int failures = 0;
  for (const auto& r : results) failures += r.passed ? 0 : 1;
  if (failures == 0) {
    out << "all " << results.size() << " criteria passed\n";
    return 0;
  }
  out << failures << " of " << results.size() << " criteria failed\n";
  return 1;
}

}  // namespace submax::accept

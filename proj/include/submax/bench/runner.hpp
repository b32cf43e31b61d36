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

// Benchmark runner: generates Kronecker max-cover instances, executes the
// configured algorithm suite over (algorithm, k, trial) tasks, and emits
// CSV tables.
//
// Determinism contract: every record is a pure function of the config and
// master seed. Tasks may run on any number of threads; records land in a
// pre-sorted slot per task, and results.csv zeroes the wall-clock column
// (real timings go to timings.csv, which is allowed to vary run to run).

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "submax/bench/config.hpp"
#include "submax/generators.hpp"
#include "submax/kronecker.hpp"
#include "submax/multiobjective.hpp"
#include "submax/rng.hpp"
#include "submax/serialize.hpp"

namespace submax::bench {

struct RunRecord {
  std::string algorithm;
  int n = 0;
  int m = 0;
  int k = 0;
  int trial = 0;
  double value = 0.0;  // min over per_objective
  std::vector<double> per_objective;
  std::uint64_t queries = 0;
  std::int64_t millis = 0;
  std::uint64_t seed = 0;
};

inline std::filesystem::path instance_path(const std::filesystem::path& dir,
                                           int trial) {
  return dir / ("instance_" + std::to_string(trial) + ".json");
}

inline std::filesystem::path graph_path(const std::filesystem::path& dir,
                                        int trial, int objective) {
  return dir / ("graph_" + std::to_string(trial) + "_" +
                std::to_string(objective) + ".json");
}

struct GeneratedTrial {
  std::vector<Graph> graphs;
  MultiObjectiveInstance instance;  // no targets; k = max of k_values
  InstanceProvenance provenance;
};

inline GeneratedTrial generate_trial(const ExperimentConfig& cfg, int trial) {
  GeneratedTrial out;
  out.provenance.master_seed = cfg.master_seed;
  out.provenance.trial = trial;
  for (int i = 0; i < cfg.m; ++i) {
    const std::uint64_t seed =
        rng::derive(cfg.master_seed, "gen-graph", static_cast<std::uint64_t>(trial),
                    static_cast<std::uint64_t>(i));
    Graph g = kronecker_generate(cfg.power(), seed);
    out.provenance.graphs.push_back(
        {g.seed, g.power, g.initiator.entries});
    out.graphs.push_back(std::move(g));
  }
  for (auto& f : max_cover_objectives(out.graphs))
    out.instance.objectives.push_back(std::move(f));
  out.instance.k = cfg.k_values.back();
  out.instance.validate();
  return out;
}

inline int cmd_gen(const ExperimentConfig& cfg, std::ostream& log) {
  cfg.validate();
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const GeneratedTrial gen = generate_trial(cfg, trial);
    for (int i = 0; i < cfg.m; ++i) {
      std::ofstream out(graph_path(dir, trial, i));
      out << serialize_graph(gen.graphs[static_cast<std::size_t>(i)]) << '\n';
    }
    std::ofstream out(instance_path(dir, trial));
    out << serialize_instance(gen.instance, gen.provenance) << '\n';
  }
  log << "wrote " << cfg.trials << " instances and " << cfg.trials * cfg.m
      << " graphs to " << dir.string() << "\n";
  return 0;
}

namespace detail {

inline RunRecord execute_task(const ExperimentConfig& cfg,
                              const MultiObjectiveInstance& base,
                              const std::string& algorithm, int k, int trial) {
  MultiObjectiveInstance inst;
  inst.objectives = base.objectives;
  inst.k = k;
  inst.validate();

  RunRecord rec;
  rec.algorithm = algorithm;
  rec.n = cfg.n;
  rec.m = cfg.m;
  rec.k = k;
  rec.trial = trial;
  rec.seed = rng::derive(cfg.master_seed, "run-" + algorithm,
                         static_cast<std::uint64_t>(trial),
                         static_cast<std::uint64_t>(k));

  inst.reset_queries();
  const auto started = std::chrono::steady_clock::now();
  ElementSet chosen(inst.ground_size());
  if (algorithm == "mwu") {
    MwuConfig mwu = benchmark_mode();
    mwu.delta = cfg.delta;
    SearchConfig search;
    search.iters = cfg.search_iters;
    chosen = solve_p1(inst, mwu, search, rec.seed).set;
  } else if (algorithm == "saturate") {
    chosen = saturate_with_search(inst, cfg.search_iters);
  } else if (algorithm == "round_robin") {
    chosen = round_robin_greedy(inst);
  } else if (algorithm == "convex_comb") {
    const std::vector<double> uniform(
        static_cast<std::size_t>(cfg.m),
        1.0 / static_cast<double>(cfg.m));
    chosen = convex_combination_greedy(inst, uniform);
  } else if (algorithm == "naive_min") {
    chosen = naive_min_greedy(inst);
  } else if (algorithm == "tuple_min") {
    chosen = tuple_min_greedy(inst, std::min(2, inst.k));
  } else {
    throw std::invalid_argument("runner: unknown algorithm " + algorithm);
  }
  const auto finished = std::chrono::steady_clock::now();
  rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   finished - started)
                   .count();
  rec.queries = inst.total_queries();
  rec.per_objective = inst.evaluate(chosen);
  rec.value = rec.per_objective.front();
  for (double v : rec.per_objective) rec.value = std::min(rec.value, v);
  return rec;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace detail

enum class InstanceSource { kFromDisk, kRegenerate };

// Executes the full (algorithm, k, trial) grid. Row order is sorted by
// (algorithm, k, trial) regardless of scheduling; `jobs` threads pull tasks
// from a shared queue, each loading its own instance copy so oracle query
// counters are never shared.
inline std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg,
                                             int jobs, InstanceSource source) {
  cfg.validate();
  if (jobs < 1) throw std::invalid_argument("runner: jobs must be >= 1");

  // Instance text per trial; parsed per task.
  std::vector<std::string> stored(static_cast<std::size_t>(cfg.trials));
  if (source == InstanceSource::kFromDisk) {
    const std::filesystem::path dir(cfg.output_dir);
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const auto path = instance_path(dir, trial);
      std::ifstream in(path);
      if (!in)
        throw std::runtime_error("runner: missing instance file " +
                                 path.string());
      std::ostringstream buffer;
      buffer << in.rdbuf();
      stored[static_cast<std::size_t>(trial)] = buffer.str();
    }
  }

  struct Task {
    std::string algorithm;
    int k = 0;
    int trial = 0;
  };
  std::vector<Task> tasks;
  std::vector<std::string> algorithms = cfg.algorithms;
  std::sort(algorithms.begin(), algorithms.end());
  for (const auto& algorithm : algorithms) {
    for (int k : cfg.k_values) {
      for (int trial = 0; trial < cfg.trials; ++trial)
        tasks.push_back({algorithm, k, trial});
    }
  }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      try {
        const Task& task = tasks[i];
        MultiObjectiveInstance inst =
            source == InstanceSource::kFromDisk
                ? parse_instance(stored[static_cast<std::size_t>(task.trial)])
                      .instance
                : generate_trial(cfg, task.trial).instance;
        records[i] = detail::execute_task(cfg, inst, task.algorithm, task.k,
                                          task.trial);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true);
        if (failure.empty()) failure = e.what();
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error("runner: " + failure);
  return records;
}

// results.csv body. The millis column is fixed at zero so the bytes are a
// pure function of (config, master_seed); real timings are a sidecar.
inline std::string results_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "algorithm,n,m,k,trial,value,queries,millis,seed";
  const int m = records.empty() ? 0 : records.front().m;
  for (int i = 0; i < m; ++i) out << ",v" << i;
  out << '\n';
  for (const RunRecord& r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.k << ','
        << r.trial << ',' << detail::format_double(r.value) << ',' << r.queries
        << ',' << 0 << ',' << r.seed;
    for (double v : r.per_objective) out << ',' << detail::format_double(v);
    out << '\n';
  }
  return out.str();
}

inline std::string timings_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "algorithm,n,m,k,trial,millis\n";
  for (const RunRecord& r : records) {
    out << r.algorithm << ',' << r.n << ',' << r.m << ',' << r.k << ','
        << r.trial << ',' << r.millis << '\n';
  }
  return out.str();
}

inline int cmd_run(const ExperimentConfig& cfg, int jobs, std::ostream& log) {
  const std::vector<RunRecord> records =
      run_experiment(cfg, jobs, InstanceSource::kFromDisk);
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "results.csv", std::ios::binary);
    out << results_csv(records);
  }
  {
    std::ofstream out(dir / "timings.csv", std::ios::binary);
    out << timings_csv(records);
  }
  log << "wrote " << records.size() << " records to "
      << (dir / "results.csv").string() << "\n";
  return 0;
}

}  // namespace submax::bench

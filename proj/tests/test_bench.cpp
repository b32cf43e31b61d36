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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/bench/config.hpp"
#include "submax/bench/plot.hpp"
#include "submax/bench/runner.hpp"
#include "submax/serialize.hpp"

using namespace submax;
using namespace submax::bench;

namespace {

// Scratch directory that cleans up after itself even when a CHECK fails.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag)
      : path(std::filesystem::temp_directory_path() /
             ("submax-test-" + tag)) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExperimentConfig tiny_config(const std::string& output_dir) {
  ExperimentConfig cfg;
  cfg.n = 8;
  cfg.m = 2;
  cfg.k_values = {2, 3};
  cfg.trials = 2;
  cfg.algorithms = {"mwu", "round_robin", "saturate"};
  cfg.delta = 0.2;
  cfg.search_iters = 6;
  cfg.master_seed = 20260401;
  cfg.output_dir = output_dir;
  return cfg;
}

}  // namespace

TEST_CASE("experiment config defaults survive an empty document") {
  const ExperimentConfig cfg = parse_experiment_config("{}");
  CHECK(cfg.n == 64);
  CHECK(cfg.m == 10);
  CHECK(cfg.k_values == std::vector<int>{5, 10, 15, 20});
  CHECK(cfg.trials == 30);
  CHECK(cfg.algorithms ==
        std::vector<std::string>{"mwu", "saturate", "round_robin"});
  CHECK(cfg.delta == 0.2);
  CHECK(cfg.search_iters == 12);
  CHECK(cfg.master_seed == 0);
  CHECK(cfg.output_dir == "out");
  CHECK(cfg.power() == 6);
}

TEST_CASE("experiment config round trips through serialization") {
  ExperimentConfig cfg = tiny_config("scratch");
  const std::string text = serialize_experiment_config(cfg);
  const ExperimentConfig back = parse_experiment_config(text);
  CHECK(back.n == cfg.n);
  CHECK(back.m == cfg.m);
  CHECK(back.k_values == cfg.k_values);
  CHECK(back.trials == cfg.trials);
  CHECK(back.algorithms == cfg.algorithms);
  CHECK(back.delta == cfg.delta);
  CHECK(back.search_iters == cfg.search_iters);
  CHECK(back.master_seed == cfg.master_seed);
  CHECK(back.output_dir == cfg.output_dir);
  CHECK(serialize_experiment_config(back) == text);
}

TEST_CASE("experiment config parsing is strict") {
  CHECK_THROWS_AS(parse_experiment_config(R"({"typo_key": 1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment_config("[1, 2, 3]"), std::invalid_argument);
  CHECK_THROWS(parse_experiment_config("not json at all"));
  CHECK_THROWS(parse_experiment_config(R"({"n": "sixty-four"})"));
}

TEST_CASE("experiment config validation rejects bad shapes") {
  auto broken = [](auto&& mutate) {
    ExperimentConfig cfg;
    mutate(cfg);
    return cfg;
  };
  CHECK_THROWS_AS(broken([](auto& c) { c.n = 63; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.n = 8192; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.m = 0; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.k_values.clear(); }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.k_values = {5, 5}; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.k_values = {10, 5}; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.k_values = {200}; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.trials = 0; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.algorithms = {"gradient"}; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      broken([](auto& c) { c.algorithms = {"mwu", "mwu"}; }).validate(),
      std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.delta = 0.0; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.delta = 0.6; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.search_iters = 0; }).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(broken([](auto& c) { c.output_dir = ""; }).validate(),
                  std::invalid_argument);
  ExperimentConfig smallest;
  smallest.n = 2;
  smallest.k_values = {1, 2};
  CHECK_NOTHROW(smallest.validate());
  CHECK(smallest.power() == 1);
}

TEST_CASE("cmd_gen writes one instance and m graphs per trial") {
  TempDir dir("gen");
  const ExperimentConfig cfg = tiny_config(dir.path.string());
  std::ostringstream log;
  CHECK(cmd_gen(cfg, log) == 0);
  CHECK(log.str().find("2 instances") != std::string::npos);

  for (int trial = 0; trial < cfg.trials; ++trial) {
    CHECK(std::filesystem::exists(instance_path(dir.path, trial)));
    for (int i = 0; i < cfg.m; ++i)
      CHECK(std::filesystem::exists(graph_path(dir.path, trial, i)));
  }

  const ParsedInstance parsed =
      parse_instance(read_file(instance_path(dir.path, 0)));
  CHECK(parsed.instance.ground_size() == cfg.n);
  CHECK(parsed.instance.num_objectives() == cfg.m);
  CHECK(parsed.instance.k == cfg.k_values.back());
  CHECK_FALSE(parsed.instance.targets.has_value());
  REQUIRE(parsed.provenance.has_value());
  CHECK(parsed.provenance->master_seed == cfg.master_seed);
  CHECK(parsed.provenance->trial == 0);
  CHECK(parsed.provenance->graphs.size() == static_cast<std::size_t>(cfg.m));

  const Graph g = parse_graph(read_file(graph_path(dir.path, 0, 1)));
  CHECK(g.n == cfg.n);
  CHECK(g.power == cfg.power());
}

TEST_CASE("run_experiment emits the sorted task grid") {
  ExperimentConfig cfg = tiny_config("unused");
  const std::vector<RunRecord> records =
      run_experiment(cfg, 1, InstanceSource::kRegenerate);
  REQUIRE(records.size() == 3u * 2u * 2u);

  // Row order is (algorithm, k, trial) lexicographic.
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto key = [](const RunRecord& r) {
      return std::make_tuple(r.algorithm, r.k, r.trial);
    };
    CHECK(key(records[i - 1]) < key(records[i]));
  }
  for (const RunRecord& r : records) {
    CHECK(r.n == cfg.n);
    CHECK(r.m == cfg.m);
    REQUIRE(r.per_objective.size() == static_cast<std::size_t>(cfg.m));
    double lo = r.per_objective[0];
    for (double v : r.per_objective) lo = std::min(lo, v);
    CHECK(r.value == lo);
    CHECK(r.queries > 0);
    CHECK(r.seed == rng::derive(cfg.master_seed, "run-" + r.algorithm,
                                static_cast<std::uint64_t>(r.trial),
                                static_cast<std::uint64_t>(r.k)));
  }
  CHECK_THROWS_AS(run_experiment(cfg, 0, InstanceSource::kRegenerate),
                  std::invalid_argument);
}

TEST_CASE("results csv is byte-identical across thread counts") {
  ExperimentConfig cfg = tiny_config("unused");
  const std::string serial =
      results_csv(run_experiment(cfg, 1, InstanceSource::kRegenerate));
  const std::string threaded =
      results_csv(run_experiment(cfg, 4, InstanceSource::kRegenerate));
  CHECK(serial == threaded);

  const CsvTable table = parse_csv(serial);
  REQUIRE(table.header ==
          std::vector<std::string>{"algorithm", "n", "m", "k", "trial",
                                   "value", "queries", "millis", "seed", "v0",
                                   "v1"});
  REQUIRE(table.rows.size() == 12u);
  for (const auto& row : table.rows) {
    CHECK(row[7] == "0");  // wall clock is scrubbed from results.csv
    CHECK(std::stod(row[5]) ==
          std::min(std::stod(row[9]), std::stod(row[10])));
  }
}

TEST_CASE("cmd_run consumes cmd_gen output and matches regeneration") {
  TempDir dir("run");
  const ExperimentConfig cfg = tiny_config(dir.path.string());
  std::ostringstream log;
  REQUIRE(cmd_gen(cfg, log) == 0);
  REQUIRE(cmd_run(cfg, 2, log) == 0);

  const std::string on_disk = read_file(dir.path / "results.csv");
  const std::string regenerated =
      results_csv(run_experiment(cfg, 1, InstanceSource::kRegenerate));
  CHECK(on_disk == regenerated);

  const CsvTable timings = parse_csv(read_file(dir.path / "timings.csv"));
  CHECK(timings.header ==
        std::vector<std::string>{"algorithm", "n", "m", "k", "trial",
                                 "millis"});
  CHECK(timings.rows.size() == 12u);
}

TEST_CASE("run_experiment reports missing instance files") {
  TempDir dir("missing");
  const ExperimentConfig cfg = tiny_config(dir.path.string());
  CHECK_THROWS_AS(run_experiment(cfg, 1, InstanceSource::kFromDisk),
                  std::runtime_error);
}

TEST_CASE("csv parser accepts tables and rejects ragged rows") {
  const CsvTable table = parse_csv("a,b\n1,2\n\n3,4\n");
  CHECK(table.header == std::vector<std::string>{"a", "b"});
  REQUIRE(table.rows.size() == 2u);
  CHECK(table.rows[1] == std::vector<std::string>{"3", "4"});

  CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_csv(""), std::runtime_error);
}

TEST_CASE("band summary uses the standard error of the mean") {
  const bench::detail::Band b = bench::detail::summarize({1.0, 3.0});
  CHECK(b.mean == 2.0);
  CHECK(b.std_error == Catch::Approx(1.0));
  const bench::detail::Band single = bench::detail::summarize({7.0});
  CHECK(single.mean == 7.0);
  CHECK(single.std_error == 0.0);
}

namespace {

// algorithm,k,trial,value rows over a fixed (n, m) shape.
std::string fake_csv(int n, int m,
                     const std::vector<std::tuple<std::string, int, int,
                                                  double>>& rows) {
  std::ostringstream out;
  out << "algorithm,n,m,k,trial,value,queries,millis,seed\n";
  for (const auto& [alg, k, trial, value] : rows) {
    out << alg << ',' << n << ',' << m << ',' << k << ',' << trial << ','
        << value << ",10,0,1\n";
  }
  return out.str();
}

}  // namespace

TEST_CASE("difference plots pair rows against the round_robin baseline") {
  const std::string csv = fake_csv(8, 2,
                                   {{"mwu", 2, 0, 5.0},
                                    {"mwu", 2, 1, 7.0},
                                    {"mwu", 3, 0, 8.0},
                                    {"mwu", 3, 1, 8.0},
                                    {"round_robin", 2, 0, 4.0},
                                    {"round_robin", 2, 1, 5.0},
                                    {"round_robin", 3, 0, 6.0},
                                    {"round_robin", 3, 1, 7.0}});
  const std::vector<RenderedPlot> plots = render_difference_plots(csv);
  REQUIRE(plots.size() == 1u);
  CHECK(plots[0].n == 8);
  CHECK(plots[0].m == 2);
  CHECK(plots[0].filename == "diff_n8_m2.svg");
  CHECK(plots[0].svg.find("<svg") != std::string::npos);
  CHECK(plots[0].svg.find("n=8, m=2") != std::string::npos);
  CHECK(plots[0].svg.find("#1f77b4") != std::string::npos);  // mwu curve
  CHECK(plots[0].svg.find("#2ca02c") != std::string::npos);  // baseline
  CHECK(plots[0].svg.find("</svg>") != std::string::npos);
}

TEST_CASE("difference plots require a complete baseline") {
  CHECK_THROWS_AS(
      render_difference_plots(fake_csv(8, 2, {{"mwu", 2, 0, 5.0}})),
      std::runtime_error);
  // Baseline present but missing one (k, trial) pairing.
  CHECK_THROWS_AS(render_difference_plots(
                      fake_csv(8, 2,
                               {{"mwu", 2, 0, 5.0},
                                {"mwu", 2, 1, 7.0},
                                {"round_robin", 2, 0, 4.0}})),
                  std::runtime_error);
  CHECK_THROWS_AS(render_difference_plots("algorithm,n,m,k,trial,value\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(render_difference_plots("a,b\n1,2\n"), std::runtime_error);
}

TEST_CASE("summary reports the best mwu gain over saturate") {
  const std::string csv = fake_csv(8, 2,
                                   {{"mwu", 2, 0, 3.0},
                                    {"mwu", 2, 1, 5.0},
                                    {"mwu", 3, 0, 6.0},
                                    {"mwu", 3, 1, 6.0},
                                    {"saturate", 2, 0, 2.0},
                                    {"saturate", 2, 1, 2.0},
                                    {"saturate", 3, 0, 5.0},
                                    {"saturate", 3, 1, 5.0}});
  // k=2: mean 4 vs 2 is +100%; k=3: 6 vs 5 is +20%. Best is 100%.
  const std::string summary = render_summary(csv);
  CHECK(summary.find("n=8 m=2: measured 100.00%") != std::string::npos);
  CHECK(summary.find("reference") == std::string::npos);

  const std::string ref_csv = fake_csv(64, 10,
                                       {{"mwu", 5, 0, 6.0},
                                        {"saturate", 5, 0, 5.0}});
  const std::string ref_summary = render_summary(ref_csv);
  CHECK(ref_summary.find("measured 20.00%") != std::string::npos);
  CHECK(ref_summary.find("(reference 9.80%, different random initiators)") !=
        std::string::npos);

  // No saturate rows: nothing to compare, header only.
  const std::string lonely = render_summary(
      fake_csv(8, 2, {{"mwu", 2, 0, 3.0}, {"round_robin", 2, 0, 1.0}}));
  CHECK(lonely.find("measured") == std::string::npos);
}

TEST_CASE("reference gains cover only the original grid") {
  REQUIRE(reference_max_gain_percent(64, 10).has_value());
  CHECK(*reference_max_gain_percent(64, 10) == 9.80);
  CHECK(*reference_max_gain_percent(1024, 100) == 7.4);
  CHECK_FALSE(reference_max_gain_percent(128, 10).has_value());
  CHECK_FALSE(reference_max_gain_percent(64, 11).has_value());
}

TEST_CASE("cmd_plot writes one svg per shape plus the summary") {
  TempDir dir("plot");
  const std::string csv = fake_csv(8, 2,
                                   {{"mwu", 2, 0, 5.0},
                                    {"mwu", 2, 1, 7.0},
                                    {"round_robin", 2, 0, 4.0},
                                    {"round_robin", 2, 1, 5.0},
                                    {"saturate", 2, 0, 4.5},
                                    {"saturate", 2, 1, 5.5}});
  std::ostringstream log;
  CHECK(cmd_plot(csv, dir.path, log) == 0);
  CHECK(std::filesystem::exists(dir.path / "diff_n8_m2.svg"));
  CHECK(std::filesystem::exists(dir.path / "summary.txt"));
  CHECK(read_file(dir.path / "summary.txt") == render_summary(csv));
  CHECK(log.str().find("diff_n8_m2.svg") != std::string::npos);
}

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

// Benchmark driver. Subcommands: gen (write graphs and instances), run
// (execute the experiment grid), plot (difference plots from results.csv),
// verify (acceptance criteria). Exit codes: 0 success, 1 verify criterion
// failure, 2 usage or config errors.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "submax.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  int jobs = 1;
  std::string level = "full";
};

submax::bench::ExperimentConfig load_config(const CommonFlags& flags) {
  std::ifstream in(flags.config_path);
  if (!in) throw std::runtime_error("cannot open config: " + flags.config_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  submax::bench::ExperimentConfig cfg =
      submax::bench::parse_experiment_config(buffer.str());
  if (flags.seed) cfg.master_seed = *flags.seed;
  if (!flags.out_dir.empty()) cfg.output_dir = flags.out_dir;
  return cfg;
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* config_opt =
      cmd->add_option("--config", flags.config_path, "experiment config JSON");
  if (config_required) config_opt->required();
  cmd->add_option("--seed", flags.seed, "override the master seed");
  cmd->add_option("--out", flags.out_dir, "override the output directory");
  cmd->add_option("--jobs", flags.jobs, "worker thread count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--level", flags.level, "verification level")
      ->check(CLI::IsMember({"fast", "full"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-objective submodular maximization benchmark"};
  app.require_subcommand(1);

  CommonFlags gen_flags, run_flags, plot_flags, verify_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate graphs and instances");
  add_common(gen, gen_flags, true);
  CLI::App* run = app.add_subcommand("run", "run the experiment grid");
  add_common(run, run_flags, true);
  CLI::App* plot = app.add_subcommand("plot", "render plots from results.csv");
  add_common(plot, plot_flags, false);
  CLI::App* verify = app.add_subcommand("verify", "run acceptance criteria");
  add_common(verify, verify_flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 treats --help as a ParseError with a zero exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return submax::bench::cmd_gen(load_config(gen_flags), std::cout);
    }
    if (run->parsed()) {
      return submax::bench::cmd_run(load_config(run_flags), run_flags.jobs,
                                    std::cout);
    }
    if (plot->parsed()) {
      std::string out_dir = plot_flags.out_dir;
      if (out_dir.empty()) {
        if (plot_flags.config_path.empty())
          throw std::runtime_error("plot needs --config or --out");
        out_dir = load_config(plot_flags).output_dir;
      }
      const std::filesystem::path csv_path =
          std::filesystem::path(out_dir) / "results.csv";
      std::ifstream in(csv_path, std::ios::binary);
      if (!in)
        throw std::runtime_error("cannot open " + csv_path.string() +
                                 "; run the experiment first");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return submax::bench::cmd_plot(buffer.str(), out_dir, std::cout);
    }
    if (verify->parsed()) {
      submax::accept::Options opts;
      opts.fast = verify_flags.level == "fast";
      opts.jobs = verify_flags.jobs;
      if (verify_flags.seed) opts.master_seed = *verify_flags.seed;
      if (!verify_flags.out_dir.empty()) opts.work_dir = verify_flags.out_dir;
      return submax::accept::verify_main(opts, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

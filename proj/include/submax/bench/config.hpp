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

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace submax::bench {

inline constexpr std::array<const char*, 6> kKnownAlgorithms = {
    "mwu", "saturate", "round_robin", "convex_comb", "naive_min", "tuple_min"};

// One benchmark campaign: Kronecker max-cover instances of a fixed shape,
// swept over k, repeated over seeded trials.
struct ExperimentConfig {
  int n = 64;  // vertex count, a power of two
  int m = 10;  // objectives (graphs) per instance
  std::vector<int> k_values = {5, 10, 15, 20};
  int trials = 30;
  std::vector<std::string> algorithms = {"mwu", "saturate", "round_robin"};
  double delta = 0.2;
  int search_iters = 12;
  std::uint64_t master_seed = 0;
  std::string output_dir = "out";

  void validate() const {
    int power = -1;
    for (int p = 1; p <= 12; ++p) {
      if (n == (1 << p)) power = p;
    }
    if (power < 0)
      throw std::invalid_argument(
          "config: n must be a power of two in [2, 4096]");
    if (m < 1) throw std::invalid_argument("config: m must be >= 1");
    if (k_values.empty())
      throw std::invalid_argument("config: k_values must be non-empty");
    for (std::size_t i = 0; i < k_values.size(); ++i) {
      if (k_values[i] < 1 || k_values[i] > n)
        throw std::invalid_argument("config: k_values must lie in [1, n]");
      if (i > 0 && k_values[i] <= k_values[i - 1])
        throw std::invalid_argument(
            "config: k_values must be strictly ascending");
    }
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (algorithms.empty())
      throw std::invalid_argument("config: algorithms must be non-empty");
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
      const auto& name = algorithms[i];
      if (std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), name) ==
          kKnownAlgorithms.end())
        throw std::invalid_argument("config: unknown algorithm " + name);
      for (std::size_t j = 0; j < i; ++j) {
        if (algorithms[j] == name)
          throw std::invalid_argument("config: duplicate algorithm " + name);
      }
    }
    if (!(delta > 0.0 && delta <= 0.5))
      throw std::invalid_argument("config: delta must be in (0, 0.5]");
    if (search_iters < 1)
      throw std::invalid_argument("config: search_iters must be >= 1");
    if (output_dir.empty())
      throw std::invalid_argument("config: output_dir must be non-empty");
  }

  int power() const {
    for (int p = 1; p <= 12; ++p) {
      if (n == (1 << p)) return p;
    }
    throw std::logic_error("config: n is not a power of two");
  }
};

// Strict JSON loader: every key must be known and well-typed; unknown keys
// fail the parse so a typo cannot silently change an experiment.
inline ExperimentConfig parse_experiment_config(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object())
    throw std::invalid_argument("config: document must be a JSON object");
  ExperimentConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n") {
      cfg.n = value.get<int>();
    } else if (key == "m") {
      cfg.m = value.get<int>();
    } else if (key == "k_values") {
      cfg.k_values = value.get<std::vector<int>>();
    } else if (key == "trials") {
      cfg.trials = value.get<int>();
    } else if (key == "algorithms") {
      cfg.algorithms = value.get<std::vector<std::string>>();
    } else if (key == "delta") {
      cfg.delta = value.get<double>();
    } else if (key == "search_iters") {
      cfg.search_iters = value.get<int>();
    } else if (key == "master_seed") {
      cfg.master_seed = value.get<std::uint64_t>();
    } else if (key == "output_dir") {
      cfg.output_dir = value.get<std::string>();
    } else {
      throw std::invalid_argument("config: unknown key " + key);
    }
  }
  cfg.validate();
  return cfg;
}

inline std::string serialize_experiment_config(const ExperimentConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["n"] = cfg.n;
  doc["m"] = cfg.m;
  doc["k_values"] = cfg.k_values;
  doc["trials"] = cfg.trials;
  doc["algorithms"] = cfg.algorithms;
  doc["delta"] = cfg.delta;
  doc["search_iters"] = cfg.search_iters;
  doc["master_seed"] = cfg.master_seed;
  doc["output_dir"] = cfg.output_dir;
  return doc.dump(2);
}

}  // namespace submax::bench

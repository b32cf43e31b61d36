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

// Stochastic Kronecker graph generation and the max-cover objectives built
// on top of the generated graphs.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "submax/coverage.hpp"
#include "submax/element_set.hpp"
#include "submax/rng.hpp"

namespace submax {

// 2x2 seed matrix, row-major. Entries in [0,1]; matrices with entry sum
// below 1 produce near-empty graphs and are discarded at draw time.
struct InitiatorMatrix {
  std::array<double, 4> entries{};

  double sum() const {
    return entries[0] + entries[1] + entries[2] + entries[3];
  }

  void validate() const {
    for (double p : entries) {
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("initiator: entries must be in [0,1]");
    }
    if (sum() < 1.0)
      throw std::invalid_argument("initiator: entry sum must be >= 1");
  }
};

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adjacency;  // sorted, symmetric, no loops

  // Generation provenance, kept for serialization.
  bool has_provenance = false;
  std::uint64_t seed = 0;
  int power = 0;
  InitiatorMatrix initiator{};
};

// Rejection-samples a uniform initiator until the entry sum reaches 1.
inline InitiatorMatrix draw_initiator(rng::Stream& stream) {
  for (;;) {
    InitiatorMatrix m;
    for (double& p : m.entries) p = stream.next_double();
    if (m.sum() >= 1.0) return m;
  }
}

// Entry (u, v) of the power-th Kronecker power: the product of initiator
// entries indexed by the bit pairs of (u, v).
inline double kronecker_entry(const InitiatorMatrix& init, int power, int u,
                              int v) {
  double p = 1.0;
  for (int level = 0; level < power; ++level) {
    const int ub = (u >> level) & 1;
    const int vb = (v >> level) & 1;
    p *= init.entries[static_cast<std::size_t>(ub * 2 + vb)];
  }
  return p;
}

struct EdgeCountStats {
  double expected = 0.0;  // sum over u < v of p_uv
  double variance = 0.0;  // sum over u < v of p_uv (1 - p_uv)
};

inline EdgeCountStats kronecker_edge_stats(const InitiatorMatrix& init,
                                           int power) {
  const int n = 1 << power;
  EdgeCountStats stats;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double p = std::min(1.0, kronecker_entry(init, power, u, v));
      stats.expected += p;
      stats.variance += p * (1.0 - p);
    }
  }
  return stats;
}

// Realizes each unordered pair u < v independently with the Kronecker
// probability (capped at 1), in a fixed pair order so the edge set is a
// pure function of (initiator, power, seed).
inline Graph kronecker_generate_with(const InitiatorMatrix& init, int power,
                                     std::uint64_t rng_seed) {
  if (power < 1 || power > 12)
    throw std::invalid_argument("kronecker: power must be in [1, 12]");
  init.validate();
  const int n = 1 << power;
  Graph g;
  g.n = n;
  g.adjacency.assign(static_cast<std::size_t>(n), {});
  g.has_provenance = true;
  g.seed = rng_seed;
  g.power = power;
  g.initiator = init;
  rng::Stream stream(rng::derive(rng_seed, "kron-edges"));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double p = std::min(1.0, kronecker_entry(init, power, u, v));
      // One draw per pair regardless of p keeps the stream aligned across
      // initiators with different support.
      const double roll = stream.next_double();
      if (roll < p) {
        g.adjacency[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency[static_cast<std::size_t>(v)].push_back(u);
      }
    }
  }
  return g;
}

inline Graph kronecker_generate(int power, std::uint64_t rng_seed) {
  rng::Stream stream(rng::derive(rng_seed, "kron-init"));
  return kronecker_generate_with(draw_initiator(stream), power, rng_seed);
}

inline std::size_t edge_count(const Graph& g) {
  std::size_t degree_total = 0;
  for (const auto& nbrs : g.adjacency) degree_total += nbrs.size();
  return degree_total / 2;
}

// One coverage objective per graph: element e covers its closed
// neighborhood {e} + neighbors(e), so every singleton has value >= 1.
inline std::vector<std::shared_ptr<const CoverageFunction>>
max_cover_objectives(const std::vector<Graph>& graphs) {
  if (graphs.empty())
    throw std::invalid_argument("max cover: at least one graph required");
  const int n = graphs.front().n;
  std::vector<std::shared_ptr<const CoverageFunction>> objectives;
  objectives.reserve(graphs.size());
  for (const Graph& g : graphs) {
    if (g.n != n)
      throw std::invalid_argument("max cover: graphs must share a vertex set");
    std::vector<ElementSet> covers;
    covers.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
      ElementSet c(n);
      c.add(e);
      for (int nbr : g.adjacency[static_cast<std::size_t>(e)]) c.add(nbr);
      covers.push_back(std::move(c));
    }
    objectives.push_back(
        std::make_shared<CoverageFunction>(n, std::move(covers)));
  }
  return objectives;
}

}  // namespace submax

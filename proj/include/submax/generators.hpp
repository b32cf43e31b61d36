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

// Synthetic instance generators and the brute-force optimum used as the
// test oracle at small sizes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/coverage.hpp"
#include "submax/element_set.hpp"
#include "submax/multiobjective.hpp"
#include "submax/rng.hpp"

namespace submax {

namespace detail {

// First `count` entries of a seeded shuffle of [0, n).
inline std::vector<int> sample_distinct(int n, int count, rng::Stream& stream) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < count; ++i) {
    const int j =
        i + static_cast<int>(stream.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(j)]);
  }
  ids.resize(static_cast<std::size_t>(count));
  return ids;
}

}  // namespace detail

// Random coverage objectives: per objective, each ground element covers
// between covers_min and covers_max distinct universe vertices chosen
// uniformly. Targets are left unset.
inline MultiObjectiveInstance random_coverage_instance(
    int n, int m, int k, int universe, int covers_min, int covers_max,
    std::uint64_t rng_seed) {
  if (n < 1 || m < 1 || universe < 1)
    throw std::invalid_argument("coverage gen: sizes must be >= 1");
  if (covers_min < 1 || covers_max < covers_min || covers_max > universe)
    throw std::invalid_argument("coverage gen: bad cover-count range");
  MultiObjectiveInstance inst;
  inst.k = k;
  for (int i = 0; i < m; ++i) {
    rng::Stream stream(rng::derive(rng_seed, "coverage-gen", static_cast<std::uint64_t>(i)));
    std::vector<ElementSet> covers;
    covers.reserve(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
      const int c = covers_min + static_cast<int>(stream.next_below(
                                     static_cast<std::uint64_t>(covers_max - covers_min + 1)));
      ElementSet cover(universe);
      for (int v : detail::sample_distinct(universe, c, stream)) cover.add(v);
      covers.push_back(std::move(cover));
    }
    inst.objectives.push_back(
        std::make_shared<CoverageFunction>(universe, std::move(covers)));
  }
  inst.validate();
  return inst;
}

struct PlantedInstance {
  MultiObjectiveInstance instance;  // targets set to f_i(planted)
  ElementSet planted;
};

// Coverage instance with a known feasible set: k planted elements each own
// a private 4-vertex block in every objective (block assignment permuted
// per objective), while the other n - k elements cover only half of some
// random block. The planted set attains every target exactly.
inline PlantedInstance planted_instance(int n, int m, int k,
                                        std::uint64_t rng_seed) {
  if (k < 1 || n < 2 * k)
    throw std::invalid_argument("planted: requires 1 <= k <= n/2");
  if (m < 1) throw std::invalid_argument("planted: m must be >= 1");
  constexpr int kBlock = 4;
  const int universe = kBlock * k;

  rng::Stream pick(rng::derive(rng_seed, "planted-ids"));
  const std::vector<int> planted_ids = detail::sample_distinct(n, k, pick);
  ElementSet planted(n);
  for (int e : planted_ids) planted.add(e);

  MultiObjectiveInstance inst;
  inst.k = k;
  std::vector<double> targets;
  for (int i = 0; i < m; ++i) {
    rng::Stream stream(rng::derive(rng_seed, "planted-obj", static_cast<std::uint64_t>(i)));
    // Random block ownership for the planted elements.
    std::vector<int> block_of = detail::sample_distinct(k, k, stream);
    std::vector<ElementSet> covers(static_cast<std::size_t>(n),
                                   ElementSet(universe));
    for (int j = 0; j < k; ++j) {
      const int base = kBlock * block_of[static_cast<std::size_t>(j)];
      for (int b = 0; b < kBlock; ++b)
        covers[static_cast<std::size_t>(planted_ids[static_cast<std::size_t>(j)])].add(base + b);
    }
    for (int e = 0; e < n; ++e) {
      if (planted.contains(e)) continue;
      const int block = static_cast<int>(stream.next_below(static_cast<std::uint64_t>(k)));
      for (int v :
           detail::sample_distinct(kBlock, kBlock / 2, stream)) {
        covers[static_cast<std::size_t>(e)].add(kBlock * block + v);
      }
    }
    auto f = std::make_shared<CoverageFunction>(universe, std::move(covers));
    targets.push_back(f->eval(planted));
    inst.objectives.push_back(std::move(f));
  }
  inst.targets = std::move(targets);
  inst.validate();
  return {std::move(inst), std::move(planted)};
}

namespace detail {

inline double binomial_or_cap(int n, int k, double cap) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
    if (c > cap) return cap + 1.0;
  }
  return c;
}

}  // namespace detail

struct BruteForceResult {
  ElementSet set;
  double value = 0.0;
};

// Exhaustive optimum of min_i f_i over k-subsets; the lexicographically
// smallest argmax. Enumeration budget C(n, k) <= 1e6.
inline BruteForceResult brute_force_p1(const MultiObjectiveInstance& inst) {
  inst.validate();
  const int n = inst.ground_size();
  const int k = inst.k;
  if (detail::binomial_or_cap(n, k, 1e6) > 1e6)
    throw std::invalid_argument("brute force: C(n, k) exceeds 1e6");

  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
  BruteForceResult best{ElementSet(n), -1.0};
  for (;;) {
    ElementSet candidate(n);
    for (int j : idx) candidate.add(j);
    const double v = inst.min_value(candidate);
    if (v > best.value) best = {candidate, v};
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

}  // namespace submax

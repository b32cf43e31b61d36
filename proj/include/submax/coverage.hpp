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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/oracles.hpp"

namespace submax {

// Set-cover objective: f(S) = |union of cover_set(e) for e in S| over a
// finite universe of vertices. Monotone and submodular. marginal() is
// native and costs a single query.
class CoverageFunction final : public ValueOracle {
 public:
  // cover_sets[e] lists the universe vertices element e covers.
  CoverageFunction(int universe, std::vector<ElementSet> cover_sets)
      : universe_(universe), covers_(std::move(cover_sets)) {
    if (universe < 0)
      throw std::invalid_argument("coverage: universe must be >= 0");
    for (const auto& c : covers_) {
      if (c.universe_size() != universe)
        throw std::invalid_argument("coverage: cover set universe mismatch");
    }
  }

  int ground_size() const override { return static_cast<int>(covers_.size()); }
  int universe_size() const { return universe_; }
  const ElementSet& cover_set(int e) const {
    return covers_[static_cast<std::size_t>(e)];
  }

  double marginal(int e, const ElementSet& s) const override {
    count_query();
    if (s.contains(e)) return 0.0;
    const auto mine = covers_[static_cast<std::size_t>(e)].words();
    std::vector<std::uint64_t> covered(mine.size(), 0);
    accumulate(s, covered);
    int gain = 0;
    for (std::size_t w = 0; w < mine.size(); ++w)
      gain += std::popcount(mine[w] & ~covered[w]);
    return static_cast<double>(gain);
  }

 protected:
  double do_eval(const ElementSet& s) const override {
    std::vector<std::uint64_t> covered(
        (static_cast<std::size_t>(universe_) + 63) / 64, 0);
    accumulate(s, covered);
    int total = 0;
    for (std::uint64_t w : covered) total += std::popcount(w);
    return static_cast<double>(total);
  }

 private:
  void accumulate(const ElementSet& s,
                  std::vector<std::uint64_t>& covered) const {
    s.for_each([&](int e) {
      const auto ws = covers_[static_cast<std::size_t>(e)].words();
      for (std::size_t w = 0; w < ws.size(); ++w) covered[w] |= ws[w];
    });
  }

  int universe_;
  std::vector<ElementSet> covers_;
};

}  // namespace submax

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

#include <memory>
#include <stdexcept>
#include <vector>

#include "submax/coverage.hpp"
#include "submax/element_set.hpp"
#include "submax/multilinear.hpp"
#include "submax/oracles.hpp"

namespace submax::testing {

// Exact multilinear extension by full subset enumeration. Exponential in
// the ground set, so tests keep n small.
inline double exact_extension(const ValueOracle& f, const FractionalPoint& x) {
  const int n = f.ground_size();
  if (n > 20) throw std::invalid_argument("exact_extension: n too large");
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    double prob = 1.0;
    ElementSet s(n);
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1) {
        prob *= x[e];
        s.add(e);
      } else {
        prob *= 1.0 - x[e];
      }
    }
    if (prob > 0.0) total += prob * f.eval(s);
  }
  return total;
}

inline std::shared_ptr<const CoverageFunction> make_coverage(
    int universe, const std::vector<std::vector<int>>& sets) {
  std::vector<ElementSet> covers;
  covers.reserve(sets.size());
  for (const auto& ids : sets) {
    ElementSet s(universe);
    for (int v : ids) s.add(v);
    covers.push_back(std::move(s));
  }
  return std::make_shared<CoverageFunction>(universe, std::move(covers));
}

inline std::shared_ptr<const ModularFunction> make_modular(
    std::vector<double> weights) {
  return std::make_shared<ModularFunction>(std::move(weights));
}

// Supermodular on purpose: f(S) = |S|^2 violates diminishing returns as
// soon as two elements exist.
class SquaredCardinality final : public ValueOracle {
 public:
  explicit SquaredCardinality(int n) : n_(n) {}
  int ground_size() const override { return n_; }

 protected:
  double do_eval(const ElementSet& s) const override {
    const double c = static_cast<double>(s.size());
    return c * c;
  }

 private:
  int n_;
};

// Monotone submodular, no native marginal; exercises the two-query path.
class SqrtCardinality final : public ValueOracle {
 public:
  explicit SqrtCardinality(int n) : n_(n) {}
  int ground_size() const override { return n_; }

 protected:
  double do_eval(const ElementSet& s) const override {
    return std::sqrt(static_cast<double>(s.size()));
  }

 private:
  int n_;
};

}  // namespace submax::testing

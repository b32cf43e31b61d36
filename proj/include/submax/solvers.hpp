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

// Cardinality-constrained maximizers for a single monotone submodular
// objective. All three variants return a set of exactly k elements and
// break value ties toward the lowest element id, so given the same oracle
// they are deterministic and mutually comparable.

#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/oracles.hpp"

namespace submax {

enum class SolverVariant { kStandardGreedy, kLazyGreedy, kThresholdGreedy };

struct SolverConfig {
  SolverVariant variant = SolverVariant::kLazyGreedy;
  // Threshold-greedy accuracy knob; ignored by the other variants.
  double delta_prime = 0.1;
};

// Approximation factor the configured variant certifies on monotone
// submodular objectives.
inline double solver_guarantee(const SolverConfig& cfg) {
  switch (cfg.variant) {
    case SolverVariant::kThresholdGreedy:
      return beta(1.0) - cfg.delta_prime;
    default:
      return beta(1.0);
  }
}

namespace detail {

inline std::vector<int> allowed_ids(int n, const ElementSet* exclude) {
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    if (exclude == nullptr || !exclude->contains(e)) ids.push_back(e);
  }
  return ids;
}

inline void check_budget(int k, std::size_t available) {
  if (k < 1) throw std::invalid_argument("solver: k must be >= 1");
  if (static_cast<std::size_t>(k) > available)
    throw std::invalid_argument("solver: k exceeds available elements");
}

}  // namespace detail

inline ElementSet standard_greedy(const ValueOracle& f, int k,
                                  const ElementSet* exclude = nullptr) {
  const int n = f.ground_size();
  const std::vector<int> ids = detail::allowed_ids(n, exclude);
  detail::check_budget(k, ids.size());
  ElementSet s(n);
  for (int round = 0; round < k; ++round) {
    int best = -1;
    double best_gain = 0.0;
    for (int e : ids) {
      if (s.contains(e)) continue;
      const double g = f.marginal(e, s);
      if (best == -1 || g > best_gain) {
        best = e;
        best_gain = g;
      }
    }
    s.add(best);
  }
  return s;
}

// Lazy variant: cached marginals from earlier rounds are upper bounds under
// diminishing returns, so an entry that is still the heap maximum after a
// same-round refresh is the true argmax. Selects the same set as
// standard_greedy and never issues more queries.
inline ElementSet lazy_greedy(const ValueOracle& f, int k,
                              const ElementSet* exclude = nullptr) {
  const int n = f.ground_size();
  const std::vector<int> ids = detail::allowed_ids(n, exclude);
  detail::check_budget(k, ids.size());

  struct Entry {
    double gain;
    int id;
    int round;
  };
  struct Worse {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.gain != b.gain) return a.gain < b.gain;
      return a.id > b.id;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, Worse> heap;

  ElementSet s(n);
  const ElementSet empty(n);
  for (int e : ids) heap.push({f.marginal(e, empty), e, 0});
  for (int round = 0; round < k; ++round) {
    for (;;) {
      Entry top = heap.top();
      heap.pop();
      if (top.round == round) {
        s.add(top.id);
        break;
      }
      heap.push({f.marginal(top.id, s), top.id, round});
    }
  }
  return s;
}

// Descending-threshold greedy: sweeps the candidate list at thresholds
// d, d(1-dp), d(1-dp)^2, ... down to (dp/n)d, taking any element whose
// current marginal clears the threshold. Certifies beta(1) - dp using
// O((n/dp) log(n/dp)) queries.
inline ElementSet threshold_greedy(const ValueOracle& f, int k,
                                   double delta_prime,
                                   const ElementSet* exclude = nullptr) {
  if (!(delta_prime > 0.0 && delta_prime < 1.0))
    throw std::invalid_argument("threshold: delta_prime must be in (0, 1)");
  const int n = f.ground_size();
  const std::vector<int> ids = detail::allowed_ids(n, exclude);
  detail::check_budget(k, ids.size());

  ElementSet s(n);
  const ElementSet empty(n);
  double top_singleton = 0.0;
  for (int e : ids) top_singleton = std::max(top_singleton, f.marginal(e, empty));

  if (top_singleton > 0.0) {
    const double floor =
        delta_prime / static_cast<double>(ids.size()) * top_singleton;
    for (double w = top_singleton; w >= floor && s.size() < k;
         w *= 1.0 - delta_prime) {
      for (int e : ids) {
        if (s.contains(e)) continue;
        if (f.marginal(e, s) >= w - kValueTolerance) {
          s.add(e);
          if (s.size() == k) break;
        }
      }
    }
  }
  // Fill any remaining budget with the lowest-id unused candidates so the
  // result always has exactly k elements.
  for (int e : ids) {
    if (s.size() == k) break;
    if (!s.contains(e)) s.add(e);
  }
  return s;
}

inline ElementSet run_solver(const ValueOracle& f, int k,
                             const SolverConfig& cfg,
                             const ElementSet* exclude = nullptr) {
  switch (cfg.variant) {
    case SolverVariant::kStandardGreedy:
      return standard_greedy(f, k, exclude);
    case SolverVariant::kLazyGreedy:
      return lazy_greedy(f, k, exclude);
    case SolverVariant::kThresholdGreedy:
      return threshold_greedy(f, k, cfg.delta_prime, exclude);
  }
  throw std::logic_error("unknown solver variant");
}

}  // namespace submax

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

// Multi-objective maximization under a cardinality constraint.
//
// Two formulations over m monotone submodular objectives f_1..f_m:
//   P1: maximize min_i f_i(S) subject to |S| <= k.
//   P2: given targets V_i, find S with f_i(S) close to V_i for all i, or
//       report that the targets are unattainable.
//
// The main pipeline attacks P2 in three stages: a single-pass filter that
// grabs elements with large capped marginals, multiplicative-weight updates
// that repeatedly solve a single weighted instance and reweight objectives
// by their shortfall, and randomized swap rounding of the averaged
// trajectory. P1 reduces to P2 by binary search on a common target.
// Baseline heuristics from the literature are included for benchmarking.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/multilinear.hpp"
#include "submax/oracles.hpp"
#include "submax/rng.hpp"
#include "submax/solvers.hpp"

namespace submax {

struct MultiObjectiveInstance {
  std::vector<OraclePtr> objectives;
  // Per-objective targets V_i; required by P2, absent for P1.
  std::optional<std::vector<double>> targets;
  int k = 1;

  int num_objectives() const { return static_cast<int>(objectives.size()); }

  int ground_size() const {
    return objectives.empty() ? 0 : objectives.front()->ground_size();
  }

  void validate() const {
    if (objectives.empty())
      throw std::invalid_argument("instance: at least one objective required");
    for (const auto& f : objectives) {
      if (!f) throw std::invalid_argument("instance: null objective");
      if (f->ground_size() != ground_size())
        throw std::invalid_argument("instance: ground set mismatch");
    }
    if (k < 1 || k > ground_size())
      throw std::invalid_argument("instance: k must be in [1, n]");
    if (targets) {
      if (static_cast<int>(targets->size()) != num_objectives())
        throw std::invalid_argument("instance: one target per objective");
      for (double v : *targets) {
        if (!(v > 0.0))
          throw std::invalid_argument("instance: targets must be > 0");
      }
    }
  }

  std::vector<double> evaluate(const ElementSet& s) const {
    std::vector<double> vals;
    vals.reserve(objectives.size());
    for (const auto& f : objectives) vals.push_back(f->eval(s));
    return vals;
  }

  double min_value(const ElementSet& s) const {
    double lo = objectives.front()->eval(s);
    for (std::size_t i = 1; i < objectives.size(); ++i)
      lo = std::min(lo, objectives[i]->eval(s));
    return lo;
  }

  std::uint64_t total_queries() const {
    std::uint64_t total = 0;
    for (const auto& f : objectives) total += f->query_count();
    return total;
  }

  void reset_queries() const {
    for (const auto& f : objectives) f->reset_query_count();
  }
};

// Same instance with every objective capped at its target. Capping is the
// standard reduction for P2: values beyond V_i carry no information.
inline MultiObjectiveInstance capped_copy(const MultiObjectiveInstance& inst) {
  inst.validate();
  if (!inst.targets)
    throw std::invalid_argument("capped_copy: targets required");
  MultiObjectiveInstance out;
  out.k = inst.k;
  out.targets = inst.targets;
  out.objectives.reserve(inst.objectives.size());
  for (std::size_t i = 0; i < inst.objectives.size(); ++i) {
    out.objectives.push_back(std::make_shared<CappedOracle>(
        inst.objectives[i], (*inst.targets)[i]));
  }
  return out;
}

struct MwuConfig {
  // Learning rate; also the additive slack in the average guarantee.
  double delta = 0.2;
  // Guarantee of the inner single-objective solver; <= 0 derives it from
  // the solver variant.
  double alpha = 0.0;
  // Filter threshold base; <= 0 picks the default for (m, k).
  double epsilon = 0.0;
  // > 0 overrides the computed round count.
  int rounds_override = 0;
  // Benchmark-mode heuristics: also rank the raw per-round sets, and skip
  // the filter stage entirely.
  bool best_of_trajectory = false;
  bool skip_stage1 = false;
  // Swap-rounding repetitions; <= 0 picks ceil(log2 m) + 1.
  int swap_repetitions = 0;
  SolverConfig solver;

  void validate() const {
    if (!(delta > 0.0 && delta <= 0.5))
      throw std::invalid_argument("mwu: delta must be in (0, 0.5]");
    if (alpha > 0.0 && alpha >= 1.0)
      throw std::invalid_argument("mwu: alpha must be < 1");
    if (epsilon > 0.0 && epsilon >= 1.0)
      throw std::invalid_argument("mwu: epsilon must be in (0, 1)");
  }
};

// Presets matching the two ways the pipeline is run: with the guarantee
// machinery intact, or tuned like the benchmark harness.
inline MwuConfig guarantee_mode() { return MwuConfig{}; }
inline MwuConfig benchmark_mode() {
  MwuConfig cfg;
  cfg.best_of_trajectory = true;
  cfg.skip_stage1 = true;
  return cfg;
}

// Round count T = ceil(2 ln m / delta^2); a single objective needs no
// reweighting, so m = 1 forces T = 1.
inline int mwu_round_count(int m, double delta) {
  if (m < 1) throw std::invalid_argument("round count: m must be >= 1");
  if (m == 1) return 1;
  return static_cast<int>(
      std::ceil(2.0 * std::log(static_cast<double>(m)) / (delta * delta)));
}

// Filter threshold default min{1/(8 ln m), (m/k)^(1/4)}, clamped to
// [0.05, 0.5] where the asymptotic formula degenerates at small sizes.
inline double default_epsilon(int m, int k) {
  if (m < 1 || k < 1)
    throw std::invalid_argument("epsilon default: m, k must be >= 1");
  double eps = std::pow(static_cast<double>(m) / static_cast<double>(k), 0.25);
  if (m > 1)
    eps = std::min(eps, 1.0 / (8.0 * std::log(static_cast<double>(m))));
  return std::clamp(eps, 0.05, 0.5);
}

// Approximation the pipeline certifies on feasible instances. At desk
// scale the m/(k eps^3) term usually drives this below zero, in which case
// no infeasibility certificate is ever issued.
inline double p2_certificate_threshold(int m, int k, double epsilon,
                                       double delta) {
  const double b = beta(1.0);
  return (1.0 - epsilon) * b * b *
             (1.0 - static_cast<double>(m) /
                        (static_cast<double>(k) * std::pow(epsilon, 3.0))) -
         delta;
}

class Stage1ExhaustedError : public std::runtime_error {
 public:
  Stage1ExhaustedError(ElementSet picked, int k)
      : std::runtime_error("stage 1 filter selected " +
                           std::to_string(picked.size()) +
                           " elements, leaving no budget out of k = " +
                           std::to_string(k)),
        selected(std::move(picked)) {}

  // The full filter pass; its postcondition holds even though the budget
  // is gone.
  ElementSet selected;
};

struct StageOneResult {
  ElementSet selected;
  int remaining_k = 0;
};

// Single ascending-id pass collecting every element whose marginal on some
// objective is still at least epsilon^3 V_i. Expects capped objectives
// (see capped_copy); each admission credits at least epsilon^3 V_i toward
// the cap of the admitting objective, so at most m/epsilon^3 elements pass.
// On exit every remaining element has f_i(e | S1) < epsilon^3 V_i for all i.
inline StageOneResult stage1_filter(const MultiObjectiveInstance& inst,
                                    double epsilon) {
  inst.validate();
  if (!inst.targets)
    throw std::invalid_argument("stage 1: targets required");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("stage 1: epsilon must be in (0, 1)");
  const int n = inst.ground_size();
  const int m = inst.num_objectives();
  const double eps3 = epsilon * epsilon * epsilon;
  ElementSet s1(n);
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i < m; ++i) {
      if (inst.objectives[static_cast<std::size_t>(i)]->marginal(e, s1) >=
          eps3 * (*inst.targets)[static_cast<std::size_t>(i)]) {
        s1.add(e);
        break;
      }
    }
  }
  if (s1.size() >= inst.k) throw Stage1ExhaustedError(std::move(s1), inst.k);
  const int remaining = inst.k - s1.size();
  return {std::move(s1), remaining};
}

struct MwuRound {
  // State at round start; entries for frozen objectives are zero.
  std::vector<double> weights;
  double potential = 0.0;
  // Set chosen by the inner solver this round, disjoint from stage1.
  ElementSet chosen;
  // Residual shortfall signals driving the weight update.
  std::vector<double> costs;
};

struct MwuTrace {
  ElementSet stage1;
  int stage2_k = 0;
  double alpha = 0.0;
  double delta = 0.0;
  int rounds_planned = 0;
  // Objectives still short of their target after stage 1; objectives
  // already satisfied are frozen at weight zero and appear in no round
  // accounting.
  std::vector<int> active;
  // Scaled residual oracles f~_i = f_i(. | stage1) / (V_i - f_i(stage1)),
  // indexed parallel to `active`. Each maps subsets of the remaining
  // ground set into [0, 1].
  std::vector<OraclePtr> residuals;
  std::vector<MwuRound> rounds;
  // Uniform average of the chosen sets; absent when no objective was
  // active (nothing left to optimize).
  std::optional<ConvexCombination> average;
  // Best swap-rounded set and the overall selected output, filled by the
  // caller that performs rounding and candidate ranking.
  std::optional<ElementSet> rounded;
  std::optional<ElementSet> output;
};

// Multiplicative-weight update loop. Each round solves one cardinality
// problem on the weighted sum of residual objectives, measures how far
// each objective landed above the solver guarantee alpha, and multiplies
// weights by (1 - delta * excess) so lagging objectives gain influence.
// Expects capped objectives and f_i(stage1) accounted per `active`.
//
// On instances whose targets are attainable together with stage1, the
// trace satisfies, for every active i,
//   (1/T) sum_t f~_i(X^t) >= (stage2_k / k) (1 - 1/e) - delta.
inline MwuTrace mwu_stage2(const MultiObjectiveInstance& inst,
                           const ElementSet& stage1, const MwuConfig& cfg,
                           const SolverConfig& solver, std::uint64_t rng_seed) {
  inst.validate();
  cfg.validate();
  if (!inst.targets)
    throw std::invalid_argument("mwu: targets required");
  if (stage1.universe_size() != inst.ground_size())
    throw std::invalid_argument("mwu: stage1 universe mismatch");
  const int m = inst.num_objectives();
  const int k1 = inst.k - stage1.size();
  if (k1 < 1)
    throw std::invalid_argument("mwu: no remaining cardinality budget");

  MwuTrace trace;
  trace.stage1 = stage1;
  trace.stage2_k = k1;
  trace.delta = cfg.delta;
  trace.alpha = cfg.alpha > 0.0 ? cfg.alpha : solver_guarantee(solver);

  for (int i = 0; i < m; ++i) {
    const auto& f = inst.objectives[static_cast<std::size_t>(i)];
    const double denom = (*inst.targets)[static_cast<std::size_t>(i)] -
                         f->eval(stage1);
    if (denom > kValueTolerance) {
      trace.active.push_back(i);
      trace.residuals.push_back(
          std::make_shared<ScaledResidualOracle>(f, stage1, denom));
    }
  }
  const int m_active = static_cast<int>(trace.active.size());
  if (m_active == 0) return trace;  // every target already met by stage1

  const int rounds = cfg.rounds_override > 0
                         ? cfg.rounds_override
                         : mwu_round_count(m_active, cfg.delta);
  trace.rounds_planned = rounds;
  trace.rounds.reserve(static_cast<std::size_t>(rounds));

  std::vector<double> lambda(static_cast<std::size_t>(m_active),
                             1.0 / static_cast<double>(m_active));
  std::vector<ElementSet> chosen_sets;
  chosen_sets.reserve(static_cast<std::size_t>(rounds));
  for (int t = 0; t < rounds; ++t) {
    MwuRound round;
    round.weights.assign(static_cast<std::size_t>(m), 0.0);
    round.costs.assign(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m_active; ++j) {
      round.weights[static_cast<std::size_t>(trace.active[j])] = lambda[j];
      round.potential += lambda[j];
    }
    const ConvexCombinationOracle target(trace.residuals, lambda);
    round.chosen = run_solver(target, k1, solver, &stage1);
    for (int j = 0; j < m_active; ++j) {
      const double cost =
          trace.residuals[static_cast<std::size_t>(j)]->eval(round.chosen) -
          trace.alpha;
      round.costs[static_cast<std::size_t>(trace.active[j])] = cost;
      // cost lies in [-alpha, 1 - alpha], so with delta <= 0.5 the update
      // factor stays strictly positive.
      lambda[j] *= 1.0 - cfg.delta * cost;
    }
    chosen_sets.push_back(round.chosen);
    trace.rounds.push_back(std::move(round));
  }
  trace.average = ConvexCombination::uniform(std::move(chosen_sets));
  // The stock solver variants are deterministic; the seed is reserved for
  // randomized inner solvers.
  (void)rng_seed;
  return trace;
}

enum class DecisionStatus { kFeasibleSet, kInfeasibleCertificate };

struct DecisionResult {
  DecisionStatus status = DecisionStatus::kFeasibleSet;
  ElementSet set;
  // Raw (uncapped) objective values of `set` and their worst target ratio.
  std::vector<double> achieved;
  double ratio = 0.0;
};

namespace detail {

inline ElementSet pad_to_k(ElementSet s, int k) {
  for (int e = 0; e < s.universe_size() && s.size() < k; ++e) {
    if (!s.contains(e)) s.add(e);
  }
  return s;
}

inline double min_target_ratio(const MultiObjectiveInstance& inst,
                               const std::vector<double>& achieved) {
  double ratio = achieved[0] / (*inst.targets)[0];
  for (std::size_t i = 1; i < achieved.size(); ++i)
    ratio = std::min(ratio, achieved[i] / (*inst.targets)[i]);
  return ratio;
}

}  // namespace detail

// Full P2 pipeline: filter, reweighting rounds, swap rounding with
// repetitions. Candidates are the filter set joined with each rounded set
// (plus each per-round set under best_of_trajectory); the winner maximizes
// min_i f_i(candidate) / V_i on the raw objectives. The trace of the
// winning run is exposed for diagnostics via trace_out.
inline DecisionResult solve_p2(const MultiObjectiveInstance& inst,
                               const MwuConfig& cfg, std::uint64_t rng_seed,
                               MwuTrace* trace_out = nullptr) {
  inst.validate();
  cfg.validate();
  if (!inst.targets)
    throw std::invalid_argument("p2: targets required");
  const int m = inst.num_objectives();
  const double epsilon =
      cfg.epsilon > 0.0 ? cfg.epsilon : default_epsilon(m, inst.k);

  const MultiObjectiveInstance capped = capped_copy(inst);
  ElementSet stage1(inst.ground_size());
  if (!cfg.skip_stage1) {
    try {
      stage1 = stage1_filter(capped, epsilon).selected;
    } catch (const Stage1ExhaustedError&) {
      // Filter consumed the whole budget; rerun the pipeline without it.
    }
  }

  MwuTrace trace =
      mwu_stage2(capped, stage1, cfg, cfg.solver,
                 rng::derive(rng_seed, "mwu-rounds"));

  std::vector<ElementSet> candidates;
  std::size_t swap_count = 0;
  if (trace.average) {
    const int reps =
        cfg.swap_repetitions > 0
            ? cfg.swap_repetitions
            : static_cast<int>(
                  std::ceil(std::log2(static_cast<double>(m)))) +
                  1;
    for (int r = 0; r < reps; ++r) {
      candidates.push_back(stage1.union_with(
          swap_round(*trace.average, rng::derive(rng_seed, "swap", r))));
    }
    swap_count = candidates.size();
    if (cfg.best_of_trajectory) {
      for (const MwuRound& round : trace.rounds)
        candidates.push_back(stage1.union_with(round.chosen));
    }
  } else {
    candidates.push_back(detail::pad_to_k(stage1, inst.k));
  }

  std::size_t best = 0;
  double best_ratio = -1.0;
  std::size_t best_swap = candidates.size();
  double best_swap_ratio = -1.0;
  std::vector<std::vector<double>> values(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    values[c] = inst.evaluate(candidates[c]);
    const double ratio = detail::min_target_ratio(inst, values[c]);
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = c;
    }
    if (c < swap_count && ratio > best_swap_ratio) {
      best_swap_ratio = ratio;
      best_swap = c;
    }
  }
  if (best_swap < candidates.size()) trace.rounded = candidates[best_swap];
  trace.output = candidates[best];

  DecisionResult result;
  result.set = candidates[best];
  result.achieved = std::move(values[best]);
  result.ratio = best_ratio;
  result.status =
      best_ratio >=
              p2_certificate_threshold(m, inst.k, epsilon, cfg.delta) -
                  kValueTolerance
          ? DecisionStatus::kFeasibleSet
          : DecisionStatus::kInfeasibleCertificate;
  if (trace_out != nullptr) *trace_out = std::move(trace);
  return result;
}

struct SearchConfig {
  int iters = 12;
  double lo = 0.0;
  // <= 0 defaults to min_i f_i(ground set), the largest attainable
  // bottleneck value.
  double hi = 0.0;
};

struct SearchResult {
  ElementSet set;
  double value = 0.0;
};

namespace detail {

inline double search_ceiling(const MultiObjectiveInstance& inst) {
  const ElementSet everything = ElementSet::full(inst.ground_size());
  return inst.min_value(everything);
}

// Shared bisection harness for P1: probe(t) proposes a set aimed at the
// common target t; the incumbent with the best bottleneck value is kept
// across all probes, feasible or not.
template <typename ProbeFn>
SearchResult bisect_targets(const MultiObjectiveInstance& inst,
                            const SearchConfig& search, ProbeFn&& probe) {
  if (search.iters < 1)
    throw std::invalid_argument("search: iters must be >= 1");
  double lo = std::max(0.0, search.lo);
  double hi = search.hi > 0.0 ? search.hi : search_ceiling(inst);
  SearchResult best{pad_to_k(ElementSet(inst.ground_size()), inst.k), -1.0};
  if (hi <= lo) {
    best.value = inst.min_value(best.set);
    return best;
  }
  for (int it = 0; it < search.iters; ++it) {
    const double t = 0.5 * (lo + hi);
    const ElementSet s = probe(t, it);
    const double value = inst.min_value(s);
    if (value > best.value) best = {s, value};
    if (value >= t - kValueTolerance) {
      lo = t;
    } else {
      hi = t;
    }
  }
  return best;
}

}  // namespace detail

// P1 solver: binary search on the common target t, running the P2 pipeline
// per probe. Returns the best set across all probes by min_i f_i.
inline SearchResult solve_p1(const MultiObjectiveInstance& inst,
                             const MwuConfig& cfg, const SearchConfig& search,
                             std::uint64_t rng_seed) {
  inst.validate();
  if (inst.targets)
    throw std::invalid_argument("p1: instance must not carry targets");
  return detail::bisect_targets(
      inst, search, [&](double t, int it) {
        MultiObjectiveInstance probe;
        probe.objectives = inst.objectives;
        probe.k = inst.k;
        probe.targets.emplace(
            static_cast<std::size_t>(inst.num_objectives()), t);
        return solve_p2(probe, cfg, rng::derive(rng_seed, "probe", it)).set;
      });
}

// Round-robin greedy baseline: step j grows the set by the best marginal
// for objective j mod m.
inline ElementSet round_robin_greedy(const MultiObjectiveInstance& inst) {
  inst.validate();
  const int n = inst.ground_size();
  const int m = inst.num_objectives();
  ElementSet s(n);
  for (int step = 0; step < inst.k; ++step) {
    const ValueOracle& f =
        *inst.objectives[static_cast<std::size_t>(step % m)];
    int best = -1;
    double best_gain = 0.0;
    for (int e = 0; e < n; ++e) {
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

// Greedy on the truncated sum g(S) = sum_i min{f_i(S), t}; value t is the
// shared saturation level.
inline ElementSet saturate(const MultiObjectiveInstance& inst, double t) {
  inst.validate();
  if (!(t > 0.0)) throw std::invalid_argument("saturate: t must be > 0");
  std::vector<OraclePtr> capped;
  capped.reserve(inst.objectives.size());
  for (const auto& f : inst.objectives)
    capped.push_back(std::make_shared<CappedOracle>(f, t));
  const ConvexCombinationOracle sum(
      std::move(capped), std::vector<double>(inst.objectives.size(), 1.0));
  return standard_greedy(sum, inst.k);
}

// Bisection wrapper around saturate, mirroring solve_p1's bookkeeping.
inline ElementSet saturate_with_search(const MultiObjectiveInstance& inst,
                                       int iters) {
  inst.validate();
  SearchConfig search;
  search.iters = iters;
  return detail::bisect_targets(inst, search, [&](double t, int) {
           return saturate(inst, t);
         })
      .set;
}

// Greedy on a fixed convex combination of the objectives. Known to starve
// objectives whose mass the combination underweights.
inline ElementSet convex_combination_greedy(const MultiObjectiveInstance& inst,
                                            const std::vector<double>& weights) {
  inst.validate();
  if (static_cast<int>(weights.size()) != inst.num_objectives())
    throw std::invalid_argument("combination greedy: one weight per objective");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0))
      throw std::invalid_argument("combination greedy: weights must be >= 0");
    total += w;
  }
  if (std::abs(total - 1.0) > kValueTolerance)
    throw std::invalid_argument("combination greedy: weights must sum to 1");
  const ConvexCombinationOracle mix(inst.objectives, weights);
  return standard_greedy(mix, inst.k);
}

// Greedy directly on h(S) = min_i f_i(S). h is not submodular; this can
// stall arbitrarily badly when no single element raises the minimum.
inline ElementSet naive_min_greedy(const MultiObjectiveInstance& inst) {
  inst.validate();
  const MinOfOracle h(inst.objectives);
  return standard_greedy(h, inst.k);
}

// Tuple variant of the minimum greedy: each iteration enumerates all
// tuple_size-subsets of unused elements and commits the one that lifts
// h(current union tuple) the most, lexicographically-first on ties.
inline ElementSet tuple_min_greedy(const MultiObjectiveInstance& inst,
                                   int tuple_size) {
  inst.validate();
  const int n = inst.ground_size();
  if (tuple_size < 1 || tuple_size > inst.k)
    throw std::invalid_argument("tuple greedy: tuple_size must be in [1, k]");
  // Enumeration budget n^tuple_size, capped at 40^3 combinations.
  const double budget = std::pow(static_cast<double>(n), tuple_size);
  if (budget > 64000.0)
    throw std::invalid_argument(
        "tuple greedy: enumeration budget exceeded, n^tuple_size = " +
        std::to_string(static_cast<long long>(budget)) + " > 64000");

  const MinOfOracle h(inst.objectives);
  ElementSet s(n);
  const int iterations = inst.k / tuple_size;
  for (int it = 0; it < iterations; ++it) {
    std::vector<int> avail;
    for (int e = 0; e < n; ++e) {
      if (!s.contains(e)) avail.push_back(e);
    }
    std::vector<int> idx(static_cast<std::size_t>(tuple_size));
    for (int j = 0; j < tuple_size; ++j) idx[static_cast<std::size_t>(j)] = j;
    std::vector<int> best_tuple;
    double best_value = -1.0;
    for (;;) {
      ElementSet candidate = s;
      for (int j : idx) candidate.add(avail[static_cast<std::size_t>(j)]);
      const double v = h.eval(candidate);
      if (v > best_value) {
        best_value = v;
        best_tuple.clear();
        for (int j : idx)
          best_tuple.push_back(avail[static_cast<std::size_t>(j)]);
      }
      // Advance to the next lexicographic combination of avail indices.
      int pos = tuple_size - 1;
      while (pos >= 0 &&
             idx[static_cast<std::size_t>(pos)] ==
                 static_cast<int>(avail.size()) - tuple_size + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < tuple_size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    for (int e : best_tuple) s.add(e);
  }
  return detail::pad_to_k(std::move(s), inst.k);
}

struct SubsetScalingResult {
  bool exists = false;
  ElementSet witness;
};

// Brute-force audit of subset scaling: does some k'-subset of sk retain,
// for every objective, a (1 - epsilon)(k' / |sk|) share of f_i(sk)?
inline SubsetScalingResult verify_lemma9(const MultiObjectiveInstance& inst,
                                         const ElementSet& sk, int kprime,
                                         double epsilon) {
  inst.validate();
  if (sk.universe_size() != inst.ground_size())
    throw std::invalid_argument("subset scaling: universe mismatch");
  if (sk.size() > 16)
    throw std::invalid_argument("subset scaling: |sk| must be <= 16");
  if (kprime < 1 || kprime > sk.size())
    throw std::invalid_argument("subset scaling: kprime must be in [1, |sk|]");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("subset scaling: epsilon must be in (0, 1)");

  const int m = inst.num_objectives();
  std::vector<double> thresholds(static_cast<std::size_t>(m));
  const double share = (1.0 - epsilon) * static_cast<double>(kprime) /
                       static_cast<double>(sk.size());
  for (int i = 0; i < m; ++i) {
    thresholds[static_cast<std::size_t>(i)] =
        share * inst.objectives[static_cast<std::size_t>(i)]->eval(sk);
  }

  const std::vector<int> members = sk.members();
  std::vector<int> idx(static_cast<std::size_t>(kprime));
  for (int j = 0; j < kprime; ++j) idx[static_cast<std::size_t>(j)] = j;
  SubsetScalingResult result;
  result.witness = ElementSet(inst.ground_size());
  for (;;) {
    ElementSet candidate(inst.ground_size());
    for (int j : idx) candidate.add(members[static_cast<std::size_t>(j)]);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      ok = inst.objectives[static_cast<std::size_t>(i)]->eval(candidate) >=
           thresholds[static_cast<std::size_t>(i)] - kValueTolerance;
    }
    if (ok) {
      result.exists = true;
      result.witness = candidate;
      return result;
    }
    int pos = kprime - 1;
    while (pos >= 0 &&
           idx[static_cast<std::size_t>(pos)] ==
               static_cast<int>(members.size()) - kprime + pos) {
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < kprime; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return result;
}

}  // namespace submax

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

// Value-oracle interface for monotone set functions, plus the wrappers the
// multi-objective pipeline composes on top of raw objectives (capping,
// residuals after a fixed base, convex combinations).
//
// Query accounting: every eval() counts one query against the oracle it is
// called on. The generic marginal costs two queries; subclasses with an
// incremental structure override marginal() and count a single query.

#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/rng.hpp"

namespace submax {

// Comparison slack for derived quantities (monotonicity and submodularity
// audits, feasibility thresholds). Raw oracle values are compared exactly.
inline constexpr double kValueTolerance = 1e-9;

// Fraction of the optimum reached by the continuous greedy dynamic after a
// time budget of eta; beta(1) is the classic 1 - 1/e.
inline double beta(double eta) {
  if (eta < 0.0) throw std::invalid_argument("beta: eta must be >= 0");
  return 1.0 - std::exp(-eta);
}

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual int ground_size() const = 0;

  double eval(const ElementSet& s) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return do_eval(s);
  }

  // f(S + e) - f(S); zero when e is already in S.
  virtual double marginal(int e, const ElementSet& s) const {
    if (s.contains(e)) return 0.0;
    ElementSet t = s;
    t.add(e);
    return eval(t) - eval(s);
  }

  std::uint64_t query_count() const {
    return queries_.load(std::memory_order_relaxed);
  }

  void reset_query_count() const {
    queries_.store(0, std::memory_order_relaxed);
  }

 protected:
  virtual double do_eval(const ElementSet& s) const = 0;

  // For marginal() overrides that bypass eval().
  void count_query() const { queries_.fetch_add(1, std::memory_order_relaxed); }

 private:
  mutable std::atomic<std::uint64_t> queries_{0};
};

using OraclePtr = std::shared_ptr<const ValueOracle>;

// f(X | A) = f(X union A) - f(A).
inline double marginal_of_set(const ValueOracle& f, const ElementSet& x,
                              const ElementSet& a) {
  return f.eval(x.union_with(a)) - f.eval(a);
}

// Additive function f(S) = sum of per-element weights.
class ModularFunction final : public ValueOracle {
 public:
  explicit ModularFunction(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  int ground_size() const override {
    return static_cast<int>(weights_.size());
  }

  double marginal(int e, const ElementSet& s) const override {
    count_query();
    return s.contains(e) ? 0.0 : weights_[static_cast<std::size_t>(e)];
  }

 protected:
  double do_eval(const ElementSet& s) const override {
    double total = 0.0;
    s.for_each([&](int e) { total += weights_[static_cast<std::size_t>(e)]; });
    return total;
  }

 private:
  std::vector<double> weights_;
};

// min{f(S), cap}. Preserves monotonicity and submodularity for cap >= 0.
class CappedOracle final : public ValueOracle {
 public:
  CappedOracle(OraclePtr inner, double cap)
      : inner_(std::move(inner)), cap_(cap) {
    if (!inner_) throw std::invalid_argument("capped: null oracle");
    if (cap_ < 0.0) throw std::invalid_argument("capped: cap must be >= 0");
  }

  int ground_size() const override { return inner_->ground_size(); }
  double cap() const { return cap_; }

 protected:
  double do_eval(const ElementSet& s) const override {
    return std::min(inner_->eval(s), cap_);
  }

 private:
  OraclePtr inner_;
  double cap_;
};

// f(S | base) / denom for a fixed base set. The base value is computed once
// at construction; marginals forward to the inner oracle against
// (base union S), so a native inner marginal stays one query.
class ScaledResidualOracle final : public ValueOracle {
 public:
  ScaledResidualOracle(OraclePtr inner, ElementSet base, double denom)
      : inner_(std::move(inner)), base_(std::move(base)), denom_(denom) {
    if (!inner_) throw std::invalid_argument("residual: null oracle");
    if (base_.universe_size() != inner_->ground_size())
      throw std::invalid_argument("residual: base universe mismatch");
    if (!(denom_ > 0.0))
      throw std::invalid_argument("residual: denom must be > 0");
    base_value_ = inner_->eval(base_);
  }

  int ground_size() const override { return inner_->ground_size(); }

  double marginal(int e, const ElementSet& s) const override {
    count_query();
    if (s.contains(e) || base_.contains(e)) return 0.0;
    return inner_->marginal(e, base_.union_with(s)) / denom_;
  }

 protected:
  double do_eval(const ElementSet& s) const override {
    return (inner_->eval(base_.union_with(s)) - base_value_) / denom_;
  }

 private:
  OraclePtr inner_;
  ElementSet base_;
  double denom_;
  double base_value_;
};

// sum_i w_i f_i(S) with w_i >= 0. Terms with zero weight are skipped and
// cost no queries, so frozen objectives drop out of the accounting.
class ConvexCombinationOracle final : public ValueOracle {
 public:
  ConvexCombinationOracle(std::vector<OraclePtr> parts,
                          std::vector<double> weights)
      : parts_(std::move(parts)), weights_(std::move(weights)) {
    if (parts_.empty()) throw std::invalid_argument("combination: no parts");
    if (parts_.size() != weights_.size())
      throw std::invalid_argument("combination: size mismatch");
    for (const auto& p : parts_) {
      if (!p) throw std::invalid_argument("combination: null oracle");
      if (p->ground_size() != parts_[0]->ground_size())
        throw std::invalid_argument("combination: ground set mismatch");
    }
    for (double w : weights_) {
      if (!(w >= 0.0))
        throw std::invalid_argument("combination: weights must be >= 0");
    }
  }

  int ground_size() const override { return parts_[0]->ground_size(); }

  double marginal(int e, const ElementSet& s) const override {
    count_query();
    double total = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (weights_[i] > 0.0) total += weights_[i] * parts_[i]->marginal(e, s);
    }
    return total;
  }

 protected:
  double do_eval(const ElementSet& s) const override {
    double total = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (weights_[i] > 0.0) total += weights_[i] * parts_[i]->eval(s);
    }
    return total;
  }

 private:
  std::vector<OraclePtr> parts_;
  std::vector<double> weights_;
};

// min_i f_i(S). Monotone but in general not submodular; used by the
// baseline heuristics that chase the bottleneck objective directly.
class MinOfOracle final : public ValueOracle {
 public:
  explicit MinOfOracle(std::vector<OraclePtr> parts)
      : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("min: no parts");
    for (const auto& p : parts_) {
      if (!p) throw std::invalid_argument("min: null oracle");
      if (p->ground_size() != parts_[0]->ground_size())
        throw std::invalid_argument("min: ground set mismatch");
    }
  }

  int ground_size() const override { return parts_[0]->ground_size(); }

 protected:
  double do_eval(const ElementSet& s) const override {
    double lo = parts_[0]->eval(s);
    for (std::size_t i = 1; i < parts_.size(); ++i)
      lo = std::min(lo, parts_[i]->eval(s));
    return lo;
  }

 private:
  std::vector<OraclePtr> parts_;
};

struct SubmodularityReport {
  bool ok = true;
  // Populated with the first violated diminishing-returns comparison.
  ElementSet subset;
  ElementSet superset;
  int element = -1;
  double gain_subset = 0.0;
  double gain_superset = 0.0;
};

// Randomized audit of diminishing returns: samples chains B <= A and an
// element outside A, and checks f(e | A) <= f(e | B) + tolerance.
inline SubmodularityReport check_submodular(const ValueOracle& f, int trials,
                                            std::uint64_t seed) {
  const int n = f.ground_size();
  SubmodularityReport report;
  if (n < 1) return report;
  rng::Stream stream(rng::derive(seed, "submod-audit"));
  for (int t = 0; t < trials; ++t) {
    const int e = static_cast<int>(stream.next_below(
        static_cast<std::uint64_t>(n)));
    ElementSet a(n);
    ElementSet b(n);
    for (int x = 0; x < n; ++x) {
      if (x == e) continue;
      if (stream.next_bool()) {
        a.add(x);
        if (stream.next_bool()) b.add(x);
      }
    }
    const double gain_a = f.marginal(e, a);
    const double gain_b = f.marginal(e, b);
    if (gain_a > gain_b + kValueTolerance) {
      report.ok = false;
      report.subset = b;
      report.superset = a;
      report.element = e;
      report.gain_subset = gain_b;
      report.gain_superset = gain_a;
      return report;
    }
  }
  return report;
}

}  // namespace submax

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

// Monte-Carlo machinery for the multilinear extension
// F(x) = E[f(R)], R including element e independently with probability x_e,
// and randomized swap rounding of convex combinations of equal-size sets.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "submax/element_set.hpp"
#include "submax/oracles.hpp"
#include "submax/rng.hpp"

namespace submax {

// Point of the cube [0,1]^n.
class FractionalPoint {
 public:
  explicit FractionalPoint(std::vector<double> coords)
      : coords_(std::move(coords)) {
    for (double& c : coords_) {
      if (c < -kValueTolerance || c > 1.0 + kValueTolerance)
        throw std::invalid_argument("fractional point: coordinate outside [0,1]");
      c = std::clamp(c, 0.0, 1.0);
      l1_ += c;
    }
  }

  static FractionalPoint zeros(int n) {
    return FractionalPoint(std::vector<double>(static_cast<std::size_t>(n), 0.0));
  }

  static FractionalPoint support_of(const ElementSet& s) {
    std::vector<double> c(static_cast<std::size_t>(s.universe_size()), 0.0);
    s.for_each([&](int e) { c[static_cast<std::size_t>(e)] = 1.0; });
    return FractionalPoint(std::move(c));
  }

  int dimension() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }
  double l1() const { return l1_; }

  FractionalPoint scaled(double theta) const {
    if (theta < 0.0 || theta > 1.0)
      throw std::invalid_argument("scaled: theta must be in [0,1]");
    std::vector<double> c = coords_;
    for (double& v : c) v *= theta;
    return FractionalPoint(std::move(c));
  }

  FractionalPoint max_with(const FractionalPoint& other) const {
    if (other.dimension() != dimension())
      throw std::invalid_argument("max_with: dimension mismatch");
    std::vector<double> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = std::max(c[i], other.coords_[i]);
    return FractionalPoint(std::move(c));
  }

  bool dominates(const FractionalPoint& other) const {
    if (other.dimension() != dimension()) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] < other.coords_[i]) return false;
    return true;
  }

 private:
  std::vector<double> coords_;
  double l1_ = 0.0;
};

struct EstimatorConfig {
  int samples = 10000;
  std::uint64_t rng_seed = 0;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

namespace detail {

// Inclusion-sample of x using one uniform draw per coordinate. Drawing
// unconditionally keeps coordinates coupled across points sharing a sample
// substream, which the marginal and concavity estimators rely on.
inline ElementSet sample_point(const FractionalPoint& x, rng::Stream& stream) {
  const int n = x.dimension();
  ElementSet r(n);
  for (int e = 0; e < n; ++e) {
    const double u = stream.next_double();
    if (u < x[e]) r.add(e);
  }
  return r;
}

inline Estimate summarize(const std::vector<double>& values) {
  Estimate est;
  const std::size_t s = values.size();
  for (double v : values) est.mean += v;
  est.mean /= static_cast<double>(s);
  if (s > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    est.std_error = std::sqrt(ss / (static_cast<double>(s) *
                                    static_cast<double>(s - 1)));
  }
  return est;
}

}  // namespace detail

// Sample mean and standard error of f over cfg.samples inclusion-samples
// of x. Sample i always uses substream(rng_seed, i), so any parallel
// evaluation order reproduces the sequential result.
inline Estimate estimate_F(const ValueOracle& f, const FractionalPoint& x,
                           const EstimatorConfig& cfg) {
  if (cfg.samples < 1)
    throw std::invalid_argument("estimator: samples must be >= 1");
  if (x.dimension() != f.ground_size())
    throw std::invalid_argument("estimator: point dimension mismatch");
  std::vector<double> values(static_cast<std::size_t>(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i) {
    rng::Stream stream = rng::substream(cfg.rng_seed, static_cast<std::uint64_t>(i));
    values[static_cast<std::size_t>(i)] = f.eval(detail::sample_point(x, stream));
  }
  return detail::summarize(values);
}

// Coupled estimate of F(x | y) = F(x max y) - F(y): each sample draws one
// uniform per coordinate and thresholds it against both points, so shared
// coordinates cancel exactly.
inline double estimate_F_marginal(const ValueOracle& f, const FractionalPoint& x,
                                  const FractionalPoint& y,
                                  const EstimatorConfig& cfg) {
  if (cfg.samples < 1)
    throw std::invalid_argument("estimator: samples must be >= 1");
  const FractionalPoint join = x.max_with(y);
  const int n = join.dimension();
  if (n != f.ground_size())
    throw std::invalid_argument("estimator: point dimension mismatch");
  double total = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    rng::Stream stream = rng::substream(cfg.rng_seed, static_cast<std::uint64_t>(i));
    ElementSet r_join(n);
    ElementSet r_y(n);
    for (int e = 0; e < n; ++e) {
      const double u = stream.next_double();
      if (u < join[e]) r_join.add(e);
      if (u < y[e]) r_y.add(e);
    }
    total += f.eval(r_join) - f.eval(r_y);
  }
  return total / static_cast<double>(cfg.samples);
}

// Convex combination of equal-size sets; the fractional point it averages
// to lives in the cardinality polytope of that size.
class ConvexCombination {
 public:
  ConvexCombination(std::vector<ElementSet> bases, std::vector<double> weights)
      : bases_(std::move(bases)), weights_(std::move(weights)) {
    if (bases_.empty())
      throw std::invalid_argument("combination: at least one base required");
    if (bases_.size() != weights_.size())
      throw std::invalid_argument("combination: size mismatch");
    double total = 0.0;
    for (double w : weights_) {
      if (!(w > 0.0))
        throw std::invalid_argument("combination: weights must be positive");
      total += w;
    }
    if (std::abs(total - 1.0) > kValueTolerance)
      throw std::invalid_argument("combination: weights must sum to 1");
    for (const auto& b : bases_) {
      if (b.universe_size() != bases_[0].universe_size())
        throw std::invalid_argument("combination: universe mismatch");
      if (b.size() != bases_[0].size())
        throw std::invalid_argument("combination: bases must have equal size");
    }
  }

  static ConvexCombination uniform(std::vector<ElementSet> bases) {
    std::vector<double> weights(bases.size(),
                                1.0 / static_cast<double>(bases.size()));
    return ConvexCombination(std::move(bases), std::move(weights));
  }

  std::size_t count() const { return bases_.size(); }
  int base_size() const { return bases_[0].size(); }
  int universe_size() const { return bases_[0].universe_size(); }
  const ElementSet& base(std::size_t t) const { return bases_[t]; }
  double weight(std::size_t t) const { return weights_[t]; }

  // Coordinatewise average: p_e = sum_t weight[t] * [e in base[t]].
  FractionalPoint marginals() const {
    std::vector<double> c(static_cast<std::size_t>(universe_size()), 0.0);
    for (std::size_t t = 0; t < bases_.size(); ++t) {
      const double w = weights_[t];
      bases_[t].for_each([&](int e) { c[static_cast<std::size_t>(e)] += w; });
    }
    for (double& v : c) v = std::min(v, 1.0);
    return FractionalPoint(std::move(c));
  }

 private:
  std::vector<ElementSet> bases_;
  std::vector<double> weights_;
};

// Randomized pairwise merge of the combination into a single set of the
// common base size. Bases are merged in index order and the lowest-id
// differing elements are paired first, so the distribution is determined
// by the seed alone. Inclusion marginals are preserved:
// E[e in result] = marginals()(e).
inline ElementSet swap_round(const ConvexCombination& comb,
                             std::uint64_t rng_seed) {
  rng::Stream stream(rng::derive(rng_seed, "swap-round"));
  ElementSet c = comb.base(0);
  double w = comb.weight(0);
  for (std::size_t t = 1; t < comb.count(); ++t) {
    ElementSet b = comb.base(t);
    const double theta = comb.weight(t);
    while (!(c == b)) {
      const int i = c.first_missing_from(b);
      const int j = b.first_missing_from(c);
      if (stream.next_double() < w / (w + theta)) {
        b.remove(j);
        b.add(i);
      } else {
        c.remove(i);
        c.add(j);
      }
    }
    w += theta;
  }
  return c;
}

// Checks concavity of F along the ray through x: F(theta x) >= theta F(x)
// up to Monte-Carlo noise. Both points are sampled with coupled draws, so
// theta = 1 passes exactly.
inline bool concavity_check(const ValueOracle& f, const FractionalPoint& x,
                            double theta, const EstimatorConfig& cfg) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw std::invalid_argument("concavity: theta must be in (0,1]");
  if (cfg.samples < 1)
    throw std::invalid_argument("estimator: samples must be >= 1");
  const FractionalPoint lo = x.scaled(theta);
  const int n = x.dimension();
  if (n != f.ground_size())
    throw std::invalid_argument("estimator: point dimension mismatch");
  // Per-sample difference f(R_lo) - theta f(R_hi) with R_lo <= R_hi.
  std::vector<double> diffs(static_cast<std::size_t>(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i) {
    rng::Stream stream = rng::substream(cfg.rng_seed, static_cast<std::uint64_t>(i));
    ElementSet r_lo(n);
    ElementSet r_hi(n);
    for (int e = 0; e < n; ++e) {
      const double u = stream.next_double();
      if (u < lo[e]) r_lo.add(e);
      if (u < x[e]) r_hi.add(e);
    }
    diffs[static_cast<std::size_t>(i)] = f.eval(r_lo) - theta * f.eval(r_hi);
  }
  const Estimate d = detail::summarize(diffs);
  return d.mean >= -3.0 * d.std_error - kValueTolerance;
}

}  // namespace submax

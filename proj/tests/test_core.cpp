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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "submax/coverage.hpp"
#include "submax/element_set.hpp"
#include "submax/oracles.hpp"
#include "submax/rng.hpp"
#include "support/test_helpers.hpp"

using namespace submax;

TEST_CASE("beta matches frozen reference values") {
  CHECK(beta(0.0) == 0.0);
  CHECK_THAT(beta(1.0), Catch::Matchers::WithinAbs(0.6321205588285577, 1e-12));
  CHECK_THAT(beta(0.5), Catch::Matchers::WithinAbs(0.3934693402873666, 1e-12));
  CHECK_THROWS_AS(beta(-0.1), std::invalid_argument);
}

TEST_CASE("element set basics") {
  ElementSet s(70);
  CHECK(s.universe_size() == 70);
  CHECK(s.empty());
  s.add(0);
  s.add(69);
  s.add(64);
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(1));
  s.add(64);
  CHECK(s.size() == 3);
  s.remove(64);
  CHECK(s.size() == 2);
  CHECK_FALSE(s.contains(64));
  CHECK_THROWS_AS(s.add(70), std::out_of_range);
  CHECK_THROWS_AS(s.add(-1), std::out_of_range);
  CHECK(s.members() == std::vector<int>{0, 69});
}

TEST_CASE("element set algebra") {
  const ElementSet a(10, {1, 3, 5, 7});
  const ElementSet b(10, {3, 4, 7, 9});
  CHECK(a.union_with(b).members() == std::vector<int>{1, 3, 4, 5, 7, 9});
  CHECK(a.intersect_with(b).members() == std::vector<int>{3, 7});
  CHECK(a.minus(b).members() == std::vector<int>{1, 5});
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(ElementSet(10, {0, 2})));
  CHECK(ElementSet(10, {3, 7}).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(a.first_missing_from(b) == 1);
  CHECK(b.first_missing_from(a) == 4);
  CHECK(a.first_missing_from(a) == -1);
  CHECK(ElementSet::full(6).size() == 6);
  CHECK(ElementSet(10, {1, 3, 5, 7}) == a);
  CHECK_FALSE(a == b);

  std::vector<int> seen;
  a.for_each([&](int e) { seen.push_back(e); });
  CHECK(seen == a.members());
}

TEST_CASE("coverage function evaluates and counts queries") {
  const auto f = testing::make_coverage(5, {{0, 1, 2}, {2, 3}, {4}});
  f->reset_query_count();
  CHECK(f->eval(ElementSet(3, {0})) == 3.0);
  CHECK(f->eval(ElementSet(3, {0, 1})) == 4.0);
  CHECK(f->eval(ElementSet(3, {0, 1, 2})) == 5.0);
  CHECK(f->eval(ElementSet(3)) == 0.0);
  CHECK(f->query_count() == 4);

  f->reset_query_count();
  CHECK(f->marginal(1, ElementSet(3, {0})) == 1.0);
  CHECK(f->query_count() == 1);
}

TEST_CASE("generic marginal costs two queries") {
  const testing::SqrtCardinality f(6);
  f.reset_query_count();
  const double gain = f.marginal(2, ElementSet(6, {0}));
  CHECK_THAT(gain, Catch::Matchers::WithinAbs(std::sqrt(2.0) - 1.0, 1e-12));
  CHECK(f.query_count() == 2);
}

TEST_CASE("modular function has native marginals") {
  const ModularFunction f({2.0, 3.0, 5.0});
  f.reset_query_count();
  CHECK(f.eval(ElementSet(3, {0, 2})) == 7.0);
  CHECK(f.marginal(1, ElementSet(3, {0})) == 3.0);
  CHECK(f.marginal(0, ElementSet(3, {0})) == 0.0);
  CHECK(f.query_count() == 3);
}

TEST_CASE("capped oracle clamps from above") {
  const auto inner = testing::make_modular({2.0, 3.0, 5.0});
  const CappedOracle f(inner, 6.0);
  CHECK(f.eval(ElementSet(3, {0})) == 2.0);
  CHECK(f.eval(ElementSet(3, {0, 1, 2})) == 6.0);
  CHECK(f.marginal(2, ElementSet(3, {1})) == 3.0);
  CHECK_THROWS_AS(CappedOracle(inner, -1.0), std::invalid_argument);
}

TEST_CASE("scaled residual oracle") {
  const auto inner = testing::make_coverage(6, {{0, 1}, {1, 2}, {3, 4}, {5}});
  const ElementSet base(4, {0});
  const ScaledResidualOracle f(inner, base, 2.0);
  CHECK(f.eval(ElementSet(4)) == 0.0);
  // Adding element 1 only contributes vertex 2 on top of the base.
  CHECK(f.eval(ElementSet(4, {1})) == 0.5);
  CHECK(f.eval(ElementSet(4, {2})) == 1.0);
  CHECK(f.marginal(0, ElementSet(4, {1})) == 0.0);
  CHECK(f.marginal(2, ElementSet(4, {1})) == 1.0);

  inner->reset_query_count();
  f.reset_query_count();
  f.marginal(3, ElementSet(4, {1}));
  CHECK(f.query_count() == 1);
  CHECK(inner->query_count() == 1);
}

TEST_CASE("convex combination oracle skips zero weights") {
  const auto a = testing::make_modular({1.0, 0.0});
  const auto b = testing::make_modular({0.0, 10.0});
  const ConvexCombinationOracle f({a, b}, {0.5, 0.0});
  a->reset_query_count();
  b->reset_query_count();
  CHECK(f.eval(ElementSet(2, {0, 1})) == 0.5);
  CHECK(a->query_count() == 1);
  CHECK(b->query_count() == 0);
  CHECK_THROWS_AS(ConvexCombinationOracle({a, b}, {0.5, -0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConvexCombinationOracle({a}, {0.5, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("min oracle takes the pointwise minimum") {
  const auto a = testing::make_modular({1.0, 5.0});
  const auto b = testing::make_modular({4.0, 2.0});
  const MinOfOracle f({a, b});
  CHECK(f.eval(ElementSet(2, {0})) == 1.0);
  CHECK(f.eval(ElementSet(2, {1})) == 2.0);
  CHECK(f.eval(ElementSet(2, {0, 1})) == 6.0);
}

TEST_CASE("marginal_of_set") {
  const auto f = testing::make_coverage(5, {{0, 1}, {1, 2}, {3}});
  CHECK(marginal_of_set(*f, ElementSet(3, {1, 2}), ElementSet(3, {0})) == 2.0);
}

TEST_CASE("submodularity audit separates coverage from squared size") {
  const auto coverage = testing::make_coverage(8, {{0, 1, 2}, {2, 3}, {3, 4, 5}, {6}, {0, 7}});
  CHECK(check_submodular(*coverage, 300, 7).ok);

  const testing::SquaredCardinality bad(6);
  const SubmodularityReport report = check_submodular(bad, 300, 7);
  CHECK_FALSE(report.ok);
  CHECK(report.element >= 0);
  CHECK(report.gain_superset > report.gain_subset);
}

TEST_CASE("rng streams are deterministic and splittable") {
  rng::Stream a(42);
  rng::Stream b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // Distinct labels and indices give distinct streams.
  const std::uint64_t s1 = rng::derive(9, "alpha");
  const std::uint64_t s2 = rng::derive(9, "bravo");
  const std::uint64_t s3 = rng::derive(9, "alpha", 1);
  CHECK(s1 != s2);
  CHECK(s1 != s3);
  CHECK(rng::substream(s1, 0).next_u64() != rng::substream(s1, 1).next_u64());

  rng::Stream u(7);
  for (int i = 0; i < 1000; ++i) {
    const double d = u.next_double();
    CHECK(d >= 0.0);
    CHECK(d < 1.0);
    CHECK(u.next_below(10) < 10);
  }
}

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

#include <stdexcept>
#include <vector>

#include "submax/generators.hpp"
#include "submax/oracles.hpp"
#include "submax/rng.hpp"
#include "submax/solvers.hpp"
#include "support/test_helpers.hpp"

using namespace submax;

TEST_CASE("standard greedy picks the classic coverage sequence") {
  const auto f = testing::make_coverage(6, {{1, 2, 3}, {3, 4}, {5}});
  CHECK(standard_greedy(*f, 1).members() == std::vector<int>{0});
  const ElementSet two = standard_greedy(*f, 2);
  // Elements 1 and 2 both gain one vertex after {0}; ties go to the lower id.
  CHECK(two.members() == std::vector<int>{0, 1});
  CHECK(f->eval(two) == 4.0);
  CHECK(standard_greedy(*f, 3).members() == std::vector<int>{0, 1, 2});
}

TEST_CASE("greedy pads zero-gain rounds to exactly k") {
  const auto f = testing::make_coverage(3, {{0, 1, 2}, {0}, {1}, {}});
  const ElementSet s = standard_greedy(*f, 3);
  CHECK(s.size() == 3);
  // Element 0 covers everything; the rest are padding by ascending id.
  CHECK(s.members() == std::vector<int>{0, 1, 2});
}

TEST_CASE("greedy honors the exclusion set") {
  const auto f = testing::make_coverage(6, {{1, 2, 3}, {3, 4}, {5}});
  const ElementSet banned(3, {0});
  const ElementSet s = standard_greedy(*f, 2, &banned);
  CHECK_FALSE(s.contains(0));
  CHECK(s.size() == 2);
}

TEST_CASE("solver budget validation") {
  const auto f = testing::make_coverage(4, {{0}, {1}, {2}});
  CHECK_THROWS_AS(standard_greedy(*f, 0), std::invalid_argument);
  CHECK_THROWS_AS(standard_greedy(*f, 4), std::invalid_argument);
  const ElementSet banned(3, {0, 1});
  CHECK_THROWS_AS(lazy_greedy(*f, 2, &banned), std::invalid_argument);
  CHECK_THROWS_AS(threshold_greedy(*f, 2, 1.5), std::invalid_argument);
}

TEST_CASE("lazy greedy matches standard greedy with fewer queries") {
  int strictly_fewer = 0;
  for (int i = 0; i < 50; ++i) {
    const MultiObjectiveInstance inst = random_coverage_instance(
        20, 1, 6, 24, 1, 3, rng::derive(99, "lazy-test", static_cast<std::uint64_t>(i)));
    const ValueOracle& f = *inst.objectives[0];
    f.reset_query_count();
    const ElementSet a = standard_greedy(f, 6);
    const std::uint64_t qa = f.query_count();
    f.reset_query_count();
    const ElementSet b = lazy_greedy(f, 6);
    const std::uint64_t qb = f.query_count();
    REQUIRE(a == b);
    REQUIRE(qb <= qa);
    if (qb < qa) ++strictly_fewer;
  }
  CHECK(strictly_fewer >= 45);
}

TEST_CASE("threshold greedy returns the top modular elements") {
  const ModularFunction f({16.0, 8.0, 4.0, 2.0, 1.0});
  const ElementSet s = threshold_greedy(f, 3, 0.3);
  CHECK(s.members() == std::vector<int>{0, 1, 2});
}

TEST_CASE("threshold greedy keeps its guarantee on small instances") {
  for (int i = 0; i < 20; ++i) {
    const MultiObjectiveInstance inst = random_coverage_instance(
        12, 1, 4, 14, 1, 3, rng::derive(7, "threshold-test", static_cast<std::uint64_t>(i)));
    const BruteForceResult opt = brute_force_p1(inst);
    const double dp = 0.2;
    const ElementSet s = threshold_greedy(*inst.objectives[0], 4, dp);
    const double val = inst.objectives[0]->eval(s);
    CHECK(val >= (beta(1.0) - dp) * opt.value - kValueTolerance);
  }
}

TEST_CASE("threshold greedy handles an all-zero objective") {
  const auto f = testing::make_coverage(2, {{}, {}, {}});
  const ElementSet s = threshold_greedy(*f, 2, 0.2);
  CHECK(s.members() == std::vector<int>{0, 1});
}

TEST_CASE("run_solver dispatches every variant") {
  const auto f = testing::make_coverage(8, {{0, 1, 2}, {2, 3}, {4, 5}, {6}, {7}});
  for (const SolverVariant v :
       {SolverVariant::kStandardGreedy, SolverVariant::kLazyGreedy,
        SolverVariant::kThresholdGreedy}) {
    SolverConfig cfg;
    cfg.variant = v;
    const ElementSet s = run_solver(*f, 3, cfg);
    CHECK(s.size() == 3);
    CHECK(f->eval(s) == 6.0);
  }
  SolverConfig guar;
  guar.variant = SolverVariant::kThresholdGreedy;
  guar.delta_prime = 0.1;
  CHECK_THAT(solver_guarantee(guar),
             Catch::Matchers::WithinAbs(beta(1.0) - 0.1, 1e-12));
  guar.variant = SolverVariant::kLazyGreedy;
  CHECK(solver_guarantee(guar) == beta(1.0));
}

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
#include <string>
#include <vector>

#include "submax/generators.hpp"
#include "submax/kronecker.hpp"
#include "submax/serialize.hpp"
#include "support/test_helpers.hpp"

using namespace submax;

TEST_CASE("instance serialization round trips byte-exactly") {
  MultiObjectiveInstance inst =
      random_coverage_instance(8, 2, 3, 10, 1, 3, 31);
  inst.targets = std::vector<double>{4.25, 6.5};

  InstanceProvenance prov;
  prov.master_seed = 123456789;
  prov.trial = 4;
  GraphProvenance g;
  g.seed = 42;
  g.power = 3;
  g.initiator = {0.9, 0.6, 0.5, 0.4};
  prov.graphs = {g, g};

  const std::string text = serialize_instance(inst, prov);
  const ParsedInstance parsed = parse_instance(text);
  CHECK(parsed.instance.ground_size() == 8);
  CHECK(parsed.instance.num_objectives() == 2);
  CHECK(parsed.instance.k == 3);
  REQUIRE(parsed.instance.targets.has_value());
  CHECK(*parsed.instance.targets == *inst.targets);
  REQUIRE(parsed.provenance.has_value());
  CHECK(parsed.provenance->master_seed == 123456789);
  CHECK(parsed.provenance->trial == 4);
  REQUIRE(parsed.provenance->graphs.size() == 2);
  CHECK(parsed.provenance->graphs[1].initiator[0] == 0.9);
  for (int i = 0; i < 2; ++i) {
    const auto& a = dynamic_cast<const CoverageFunction&>(*inst.objectives[i]);
    const auto& b =
        dynamic_cast<const CoverageFunction&>(*parsed.instance.objectives[i]);
    REQUIRE(a.universe_size() == b.universe_size());
    for (int e = 0; e < 8; ++e) CHECK(a.cover_set(e) == b.cover_set(e));
  }
  // Reserializing the parse reproduces the exact bytes.
  CHECK(serialize_instance(parsed.instance, parsed.provenance) == text);
}

TEST_CASE("instance serialization without targets or provenance") {
  const MultiObjectiveInstance inst =
      random_coverage_instance(5, 1, 2, 6, 1, 2, 9);
  const std::string text = serialize_instance(inst);
  const ParsedInstance parsed = parse_instance(text);
  CHECK_FALSE(parsed.instance.targets.has_value());
  CHECK_FALSE(parsed.provenance.has_value());
  CHECK(serialize_instance(parsed.instance) == text);
}

TEST_CASE("only coverage objectives serialize") {
  MultiObjectiveInstance inst;
  inst.objectives = {testing::make_modular({1.0, 2.0})};
  inst.k = 1;
  CHECK_THROWS_AS(serialize_instance(inst), std::invalid_argument);
}

TEST_CASE("graph serialization round trips") {
  const Graph g = kronecker_generate(4, 2025);
  const std::string text = serialize_graph(g);
  const Graph back = parse_graph(text);
  CHECK(back.n == g.n);
  CHECK(back.adjacency == g.adjacency);
  CHECK(back.has_provenance);
  CHECK(back.seed == g.seed);
  CHECK(back.power == g.power);
  CHECK(back.initiator.entries == g.initiator.entries);
  CHECK(serialize_graph(back) == text);

  Graph bare;
  bare.n = 3;
  bare.adjacency = {{1}, {0}, {}};
  const Graph bare_back = parse_graph(serialize_graph(bare));
  CHECK_FALSE(bare_back.has_provenance);
  CHECK(bare_back.adjacency == bare.adjacency);
}

TEST_CASE("parsers reject foreign documents") {
  CHECK_THROWS(parse_instance("not json"));
  CHECK_THROWS_AS(parse_instance("[1,2,3]"), std::runtime_error);
  CHECK_THROWS_AS(parse_instance(R"({"format":"something-else","version":1})"),
                  std::runtime_error);
  CHECK_THROWS_AS(
      parse_instance(R"({"format":"submax-instance","version":2})"),
      std::runtime_error);
  CHECK_THROWS_AS(parse_graph(R"({"format":"submax-instance","version":1})"),
                  std::runtime_error);
  // Mismatched counts are rejected even when the envelope is right.
  CHECK_THROWS_AS(
      parse_instance(
          R"({"format":"submax-instance","version":1,"n":2,"m":2,"k":1,)"
          R"("objectives":[{"universe":3,"cover_sets":[[0],[1]]}]})"),
      std::runtime_error);
}

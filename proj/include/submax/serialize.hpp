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

// Versioned JSON formats for coverage instances and generated graphs.
// Serialization uses ordered keys and shortest round-trip floats, so a
// fixed object always produces identical bytes and doubles survive a
// round-trip bit-exactly.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "submax/coverage.hpp"
#include "submax/kronecker.hpp"
#include "submax/multiobjective.hpp"

namespace submax {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kInstanceFormat = "submax-instance";
inline constexpr const char* kGraphFormat = "submax-graph";

struct GraphProvenance {
  std::uint64_t seed = 0;
  int power = 0;
  std::array<double, 4> initiator{};
};

struct InstanceProvenance {
  std::uint64_t master_seed = 0;
  int trial = 0;
  std::vector<GraphProvenance> graphs;
};

struct ParsedInstance {
  MultiObjectiveInstance instance;
  std::optional<InstanceProvenance> provenance;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline void expect_format(const Json& doc, const char* format) {
  if (!doc.is_object()) throw std::runtime_error("parse: not a JSON object");
  if (!doc.contains("format") || doc["format"] != format)
    throw std::runtime_error(std::string("parse: expected format ") + format);
  if (!doc.contains("version") || doc["version"] != kFormatVersion)
    throw std::runtime_error("parse: unsupported version");
}

inline Json cover_sets_json(const CoverageFunction& f) {
  Json sets = Json::array();
  for (int e = 0; e < f.ground_size(); ++e)
    sets.push_back(f.cover_set(e).members());
  return sets;
}

inline ElementSet set_from_ids(int universe, const Json& ids) {
  ElementSet s(universe);
  for (const auto& v : ids) s.add(v.get<int>());
  return s;
}

}  // namespace detail

// Instances serialize only when every objective is a CoverageFunction;
// arbitrary oracles have no portable representation.
inline std::string serialize_instance(
    const MultiObjectiveInstance& inst,
    const std::optional<InstanceProvenance>& provenance = std::nullopt) {
  inst.validate();
  detail::Json doc;
  doc["format"] = kInstanceFormat;
  doc["version"] = kFormatVersion;
  doc["n"] = inst.ground_size();
  doc["m"] = inst.num_objectives();
  doc["k"] = inst.k;
  if (inst.targets) doc["targets"] = *inst.targets;
  detail::Json objectives = detail::Json::array();
  for (const auto& f : inst.objectives) {
    const auto* coverage = dynamic_cast<const CoverageFunction*>(f.get());
    if (coverage == nullptr)
      throw std::invalid_argument(
          "serialize: only coverage objectives are serializable");
    detail::Json obj;
    obj["universe"] = coverage->universe_size();
    obj["cover_sets"] = detail::cover_sets_json(*coverage);
    objectives.push_back(std::move(obj));
  }
  doc["objectives"] = std::move(objectives);
  if (provenance) {
    detail::Json prov;
    prov["master_seed"] = provenance->master_seed;
    prov["trial"] = provenance->trial;
    detail::Json graphs = detail::Json::array();
    for (const auto& g : provenance->graphs) {
      detail::Json gj;
      gj["seed"] = g.seed;
      gj["power"] = g.power;
      gj["initiator"] = g.initiator;
      graphs.push_back(std::move(gj));
    }
    prov["graphs"] = std::move(graphs);
    doc["provenance"] = std::move(prov);
  }
  return doc.dump();
}

inline ParsedInstance parse_instance(const std::string& text) {
  const detail::Json doc = detail::Json::parse(text);
  detail::expect_format(doc, kInstanceFormat);
  ParsedInstance out;
  const int n = doc.at("n").get<int>();
  const int m = doc.at("m").get<int>();
  out.instance.k = doc.at("k").get<int>();
  if (doc.contains("targets"))
    out.instance.targets = doc["targets"].get<std::vector<double>>();
  const auto& objectives = doc.at("objectives");
  if (static_cast<int>(objectives.size()) != m)
    throw std::runtime_error("parse: objective count mismatch");
  for (const auto& obj : objectives) {
    const int universe = obj.at("universe").get<int>();
    const auto& sets = obj.at("cover_sets");
    if (static_cast<int>(sets.size()) != n)
      throw std::runtime_error("parse: cover set count mismatch");
    std::vector<ElementSet> covers;
    covers.reserve(static_cast<std::size_t>(n));
    for (const auto& ids : sets)
      covers.push_back(detail::set_from_ids(universe, ids));
    out.instance.objectives.push_back(
        std::make_shared<CoverageFunction>(universe, std::move(covers)));
  }
  if (doc.contains("provenance")) {
    const auto& prov = doc["provenance"];
    InstanceProvenance p;
    p.master_seed = prov.at("master_seed").get<std::uint64_t>();
    p.trial = prov.at("trial").get<int>();
    for (const auto& gj : prov.at("graphs")) {
      GraphProvenance g;
      g.seed = gj.at("seed").get<std::uint64_t>();
      g.power = gj.at("power").get<int>();
      g.initiator = gj.at("initiator").get<std::array<double, 4>>();
      p.graphs.push_back(g);
    }
    out.provenance = std::move(p);
  }
  out.instance.validate();
  return out;
}

inline std::string serialize_graph(const Graph& g) {
  detail::Json doc;
  doc["format"] = kGraphFormat;
  doc["version"] = kFormatVersion;
  doc["n"] = g.n;
  if (g.has_provenance) {
    doc["seed"] = g.seed;
    doc["power"] = g.power;
    doc["initiator"] = g.initiator.entries;
  }
  doc["adjacency"] = g.adjacency;
  return doc.dump();
}

inline Graph parse_graph(const std::string& text) {
  const detail::Json doc = detail::Json::parse(text);
  detail::expect_format(doc, kGraphFormat);
  Graph g;
  g.n = doc.at("n").get<int>();
  g.adjacency = doc.at("adjacency").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(g.adjacency.size()) != g.n)
    throw std::runtime_error("parse: adjacency size mismatch");
  if (doc.contains("seed")) {
    g.has_provenance = true;
    g.seed = doc["seed"].get<std::uint64_t>();
    g.power = doc.at("power").get<int>();
    g.initiator.entries = doc.at("initiator").get<std::array<double, 4>>();
  }
  return g;
}

}  // namespace submax

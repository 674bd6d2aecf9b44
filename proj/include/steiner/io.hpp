#pragma once

// Design files are JSON:
//   {"v": 96, "k": 6,
//    "scenario": {"kind": "CyclicTwoOrbit", "group": "Cyclic(48)"},   optional
//    "blocks": [["0", "1", "3", "13", "28", "0'"], ...]}
// Block entries are point labels. Without a scenario the labels are the
// bare point indices 0..v-1. Blocks are written sorted; readers accept any
// order and JSON integers as well as strings.

#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "action.hpp"
#include "common.hpp"
#include "design.hpp"
#include "group.hpp"

namespace steiner {

struct ScenarioDescriptor {
  ScenarioKind kind = ScenarioKind::RegularPlusFixed;
  GroupSpec group;

  std::shared_ptr<const ActionScenario> build() const {
    return std::make_shared<const ActionScenario>(build_scenario(kind, build_group(group)));
  }
};

struct DesignFile {
  Design design;
  std::optional<ScenarioDescriptor> scenario;

  /// Labels used on disk: the scenario's, or bare indices.
  PointSpace space() const {
    if (scenario) return scenario_space(scenario->kind, *scenario_group_order(scenario->kind, design.v()));
    return PointSpace({{OrbitKind::Regular, design.v()}});
  }
};

inline nlohmann::json design_to_json(const DesignFile& f) {
  const PointSpace space = f.space();
  nlohmann::json j;
  j["v"] = f.design.v();
  j["k"] = f.design.k();
  if (f.scenario)
    j["scenario"] = {{"kind", to_string(f.scenario->kind)}, {"group", f.scenario->group.to_string()}};
  auto blocks = nlohmann::json::array();
  for (const auto& b : f.design.blocks()) {
    auto row = nlohmann::json::array();
    for (auto p : b) row.push_back(space.label(p));
    blocks.push_back(std::move(row));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

inline DesignFile design_from_json(const nlohmann::json& j) {
  try {
    DesignFile f;
    const std::size_t v = j.at("v").get<std::size_t>();
    const std::size_t k = j.at("k").get<std::size_t>();
    if (j.contains("scenario") && !j["scenario"].is_null()) {
      ScenarioDescriptor sd;
      sd.kind = parse_scenario_kind(j["scenario"].at("kind").get<std::string>());
      sd.group = GroupSpec::parse(j["scenario"].at("group").get<std::string>());
      if (!scenario_group_order(sd.kind, v))
        fail(ErrorCode::Parse, "design file: v = " + std::to_string(v) + " does not fit " + to_string(sd.kind));
      f.scenario = sd;
    }
    const PointSpace space = f.scenario ? scenario_space(f.scenario->kind, *scenario_group_order(f.scenario->kind, v))
                                        : PointSpace({{OrbitKind::Regular, v}});
    if (space.v() != v) fail(ErrorCode::Parse, "design file: scenario point count differs from v");
    std::vector<Block> blocks;
    for (const auto& row : j.at("blocks")) {
      Block b;
      for (const auto& item : row)
        b.push_back(item.is_number_integer() ? space.parse_label(std::to_string(item.get<long long>()))
                                             : space.parse_label(item.get<std::string>()));
      blocks.push_back(std::move(b));
    }
    f.design = Design::make(v, k, std::move(blocks));
    return f;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("design file: ") + e.what());
  }
}

inline void write_design(std::ostream& out, const DesignFile& f) { out << design_to_json(f).dump() << "\n"; }

inline DesignFile read_design(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Parse, std::string("design file: ") + e.what());
  }
  return design_from_json(j);
}

inline DesignFile read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  return read_design(in);
}

inline void write_design_file(const std::string& path, const DesignFile& f) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::Io, "cannot write " + path);
  write_design(out, f);
  if (!out) fail(ErrorCode::Io, "write failed: " + path);
}

}  // namespace steiner

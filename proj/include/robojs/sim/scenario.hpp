// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "robojs/sim/world_state.hpp"

namespace robojs::sim {

struct RobotSpec {
  int id = 0;
  double x = 0, y = 0, theta = 0;
  bool available = true;
  bool random_pose = false;  // placed on a random free cell from the seed
};

struct CellPair {
  int ax = 0, ay = 0, bx = 0, by = 0;
};

struct Item {
  double x = 0, y = 0;
};

struct ScenarioConfig {
  std::string name;
  std::string description;
  std::string background = "pitch";  // "pitch" or "maze"
  double cell_size = 0.3;
  std::vector<RobotSpec> robots;
  BallState ball;
  std::vector<CellPair> walls;
  std::vector<Item> items;
  int random_items = 0;  // extra items on random cells
  std::uint32_t seed = 0;
  std::string adversary;   // "", "chaser", "goalie" or "opponents"
  std::vector<int> adversary_robots;
};

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problems that make a scenario unusable; empty when valid.
std::vector<std::string> validate(const ScenarioConfig& config);

/// Resolves random placements from the seed (or `seed` when given) and
/// validates the result. Throws ScenarioError.
ScenarioConfig resolve(const ScenarioConfig& config, std::optional<std::uint32_t> seed = {});

/// Initial world of a resolved scenario.
WorldState initial_world(const ScenarioConfig& resolved);

ScenarioConfig scenario_from_json(const std::string& text);
std::string scenario_to_json(const ScenarioConfig& config);

/// Directory searched for `<name>.json`: $ROBOJS_SCENARIOS, else the
/// scenarios/ directory of the source tree.
std::string scenario_directory();
ScenarioConfig load_scenario_file(const std::string& path);
ScenarioConfig load_scenario(const std::string& name);
/// Names of the scenario files in scenario_directory(), sorted.
std::vector<std::string> scenario_names();

}  // namespace robojs::sim

// SPDX-License-Identifier: Apache-2.0
#include "robojs/sim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace robojs::sim {

namespace {

using nlohmann::json;

constexpr double kHalfX = 1.8;
constexpr double kHalfY = 1.2;
constexpr double kRadius = 0.09;
constexpr double kSeparation = 2 * kRadius + 0.05;

struct Grid {
  int cols, rows;
  double ox, oy, cs;

  explicit Grid(double cell)
      : cols(static_cast<int>(std::floor(2 * kHalfX / cell + 1e-9))),
        rows(static_cast<int>(std::floor(2 * kHalfY / cell + 1e-9))),
        ox(-(cols - 1) * cell / 2),
        oy(-(rows - 1) * cell / 2),
        cs(cell) {}

  bool contains(int cx, int cy) const { return cx >= 0 && cy >= 0 && cx < cols && cy < rows; }
  double x(int cx) const { return ox + cx * cs; }
  double y(int cy) const { return oy + cy * cs; }
};

bool inside_inset(double x, double y) {
  return std::abs(x) <= kHalfX - kRadius + 1e-12 && std::abs(y) <= kHalfY - kRadius + 1e-12;
}

double get_number(const json& j, const char* key, double fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) throw ScenarioError(std::string("field '") + key + "' must be a number");
  return it->get<double>();
}

}  // namespace

std::vector<std::string> validate(const ScenarioConfig& c) {
  std::vector<std::string> problems;
  if (c.name.empty()) problems.push_back("scenario has no name");
  if (c.background != "pitch" && c.background != "maze") {
    problems.push_back("background must be 'pitch' or 'maze'");
  }
  if (!(c.cell_size > 0) || c.cell_size > 2 * kHalfY) {
    problems.push_back("cell_size must be positive and fit the field");
    return problems;
  }
  Grid grid(c.cell_size);
  std::set<int> ids;
  for (const auto& r : c.robots) {
    if (!ids.insert(r.id).second) {
      problems.push_back("duplicate robot id " + std::to_string(r.id));
    }
    if (!r.random_pose && !inside_inset(r.x, r.y)) {
      problems.push_back("robot " + std::to_string(r.id) + " starts outside the field");
    }
  }
  for (std::size_t i = 0; i < c.robots.size(); ++i) {
    for (std::size_t j = i + 1; j < c.robots.size(); ++j) {
      const auto& a = c.robots[i];
      const auto& b = c.robots[j];
      if (a.random_pose || b.random_pose) continue;
      if (std::hypot(a.x - b.x, a.y - b.y) < kSeparation) {
        problems.push_back("robots " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                           " overlap");
      }
    }
  }
  if (std::abs(c.ball.x) > kHalfX || std::abs(c.ball.y) > kHalfY) {
    problems.push_back("ball starts outside the field");
  }
  for (const auto& w : c.walls) {
    bool adjacent = std::abs(w.ax - w.bx) + std::abs(w.ay - w.by) == 1;
    if (!adjacent || !grid.contains(w.ax, w.ay) || !grid.contains(w.bx, w.by)) {
      problems.push_back("wall between non-adjacent or off-grid cells");
    }
  }
  for (const auto& it : c.items) {
    if (std::abs(it.x) > kHalfX || std::abs(it.y) > kHalfY) {
      problems.push_back("item outside the field");
    }
  }
  if (c.random_items < 0 || c.random_items > grid.cols * grid.rows) {
    problems.push_back("random_items out of range");
  }
  static const std::set<std::string> adversaries{"", "chaser", "goalie", "opponents"};
  if (!adversaries.count(c.adversary)) problems.push_back("unknown adversary '" + c.adversary + "'");
  for (int id : c.adversary_robots) {
    if (!ids.count(id)) problems.push_back("adversary robot " + std::to_string(id) + " missing");
  }
  if (!c.adversary.empty() && c.adversary_robots.empty()) {
    problems.push_back("adversary without robots");
  }
  return problems;
}

ScenarioConfig resolve(const ScenarioConfig& config, std::optional<std::uint32_t> seed) {
  ScenarioConfig out = config;
  if (seed) out.seed = *seed;
  auto problems = validate(out);
  if (!problems.empty()) throw ScenarioError(out.name + ": " + problems.front());

  Grid grid(out.cell_size);
  std::mt19937 rng(out.seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint32_t>(n)); };
  auto clear = [&](double x, double y, const RobotSpec* self) {
    if (!inside_inset(x, y)) return false;
    for (const auto& r : out.robots) {
      if (&r == self || r.random_pose) continue;
      if (std::hypot(r.x - x, r.y - y) < kSeparation) return false;
    }
    return std::hypot(out.ball.x - x, out.ball.y - y) >= kRadius + 0.0215;
  };
  for (auto& r : out.robots) {
    if (!r.random_pose) continue;
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      double x = grid.x(pick(grid.cols));
      double y = grid.y(pick(grid.rows));
      if (clear(x, y, &r)) {
        r.x = x;
        r.y = y;
        r.theta = 90.0 * (pick(4) - 1);
        r.random_pose = false;
        placed = true;
      }
    }
    if (!placed) throw ScenarioError(out.name + ": no free cell for robot " + std::to_string(r.id));
  }
  std::set<std::pair<int, int>> used;
  for (int n = 0; n < out.random_items; ++n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      int cx = pick(grid.cols);
      int cy = pick(grid.rows);
      double x = grid.x(cx);
      double y = grid.y(cy);
      bool on_robot = std::any_of(out.robots.begin(), out.robots.end(), [&](const RobotSpec& r) {
        return std::hypot(r.x - x, r.y - y) < kRadius * 2;
      });
      if (on_robot || !used.insert({cx, cy}).second) continue;
      out.items.push_back({x, y});
      break;
    }
  }
  out.random_items = 0;
  problems = validate(out);
  if (!problems.empty()) throw ScenarioError(out.name + ": " + problems.front());
  return out;
}

WorldState initial_world(const ScenarioConfig& resolved) {
  WorldState w;
  for (const auto& r : resolved.robots) {
    RobotState s;
    s.id = r.id;
    s.x = r.x;
    s.y = r.y;
    s.theta = r.theta;
    s.available = r.available;
    w.robots.push_back(s);
  }
  w.ball = resolved.ball;
  return w;
}

ScenarioConfig scenario_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }
  if (!j.is_object()) throw ScenarioError("scenario must be an object");
  ScenarioConfig c;
  try {
    c.name = j.value("name", "");
    c.description = j.value("description", "");
    c.background = j.value("background", "pitch");
    c.cell_size = get_number(j, "cell_size", 0.3);
    c.seed = j.value("seed", 0u);
    c.random_items = j.value("random_items", 0);
    c.adversary = j.value("adversary", "");
    c.adversary_robots = j.value("adversary_robots", std::vector<int>{});
    for (const auto& r : j.value("robots", json::array())) {
      RobotSpec s;
      s.id = r.at("id").get<int>();
      s.random_pose = r.value("random", false);
      s.x = get_number(r, "x", 0);
      s.y = get_number(r, "y", 0);
      s.theta = get_number(r, "theta", 0);
      s.available = r.value("available", true);
      c.robots.push_back(s);
    }
    if (j.contains("ball")) {
      const auto& b = j["ball"];
      c.ball = {get_number(b, "x", 0), get_number(b, "y", 0), get_number(b, "vx", 0),
                get_number(b, "vy", 0)};
    }
    for (const auto& w : j.value("walls", json::array())) {
      if (!w.is_array() || w.size() != 2) throw ScenarioError("wall must be a pair of cells");
      c.walls.push_back({w[0].at(0).get<int>(), w[0].at(1).get<int>(), w[1].at(0).get<int>(),
                         w[1].at(1).get<int>()});
    }
    for (const auto& it : j.value("items", json::array())) {
      c.items.push_back({get_number(it, "x", 0), get_number(it, "y", 0)});
    }
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }
  return c;
}

std::string scenario_to_json(const ScenarioConfig& c) {
  json j;
  j["name"] = c.name;
  j["description"] = c.description;
  j["background"] = c.background;
  j["cell_size"] = c.cell_size;
  j["seed"] = c.seed;
  j["random_items"] = c.random_items;
  j["adversary"] = c.adversary;
  j["adversary_robots"] = c.adversary_robots;
  j["robots"] = json::array();
  for (const auto& r : c.robots) {
    json o{{"id", r.id}, {"x", r.x}, {"y", r.y}, {"theta", r.theta}, {"available", r.available}};
    if (r.random_pose) o["random"] = true;
    j["robots"].push_back(o);
  }
  j["ball"] = {{"x", c.ball.x}, {"y", c.ball.y}, {"vx", c.ball.vx}, {"vy", c.ball.vy}};
  j["walls"] = json::array();
  for (const auto& w : c.walls) {
    j["walls"].push_back(json::array({json::array({w.ax, w.ay}), json::array({w.bx, w.by})}));
  }
  j["items"] = json::array();
  for (const auto& it : c.items) j["items"].push_back({{"x", it.x}, {"y", it.y}});
  return j.dump(2);
}

std::string scenario_directory() {
  if (const char* env = std::getenv("ROBOJS_SCENARIOS"); env && *env) return env;
  return std::string(ROBOJS_SOURCE_DIR) + "/scenarios";
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json(ss.str());
}

ScenarioConfig load_scenario(const std::string& name) {
  if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos) {
    throw ScenarioError("invalid scenario name '" + name + "'");
  }
  std::string path = scenario_directory() + "/" + name + ".json";
  if (!std::filesystem::exists(path)) throw ScenarioError("unknown scenario '" + name + "'");
  return load_scenario_file(path);
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(scenario_directory(), ec)) {
    if (e.path().extension() == ".json") names.push_back(e.path().stem().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace robojs::sim

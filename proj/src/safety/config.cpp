// SPDX-License-Identifier: Apache-2.0
#include "robojs/safety/config.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace robojs::safety {

namespace {

using nlohmann::json;

template <typename F>
void each_field(SafetyConfig& c, F&& f) {
  f("max_speed", c.max_speed);
  f("hardware_speed_cap", c.hardware_speed_cap);
  f("max_angular_speed", c.max_angular_speed);
  f("max_decel", c.max_decel);
  f("command_timeout", c.command_timeout);
  f("control_period", c.control_period);
  f("safety_margin", c.safety_margin);
  f("field_half_x", c.field_half_x);
  f("field_half_y", c.field_half_y);
  f("robot_radius", c.robot_radius);
  f("kick_max_dist", c.kick_max_dist);
  f("kick_cone_half_angle", c.kick_cone_half_angle);
}

}  // namespace

std::vector<std::string> validate(const SafetyConfig& c) {
  std::vector<std::string> out;
  if (!(c.max_speed > 0 && c.max_speed <= c.hardware_speed_cap)) {
    out.push_back("max_speed must be in (0, hardware_speed_cap]");
  }
  if (!(c.safety_margin > 0)) out.push_back("safety_margin must be positive");
  if (!(c.robot_radius > 0)) out.push_back("robot_radius must be positive");
  if (!(c.field_half_x > c.robot_radius && c.field_half_y > c.robot_radius)) {
    out.push_back("field must be larger than a robot");
  }
  if (!(c.max_decel > 0)) out.push_back("max_decel must be positive");
  if (!(c.max_angular_speed > 0)) out.push_back("max_angular_speed must be positive");
  if (!(c.command_timeout > 0)) out.push_back("command_timeout must be positive");
  if (!(c.control_period > 0)) out.push_back("control_period must be positive");
  if (!(c.kick_max_dist > 0)) out.push_back("kick_max_dist must be positive");
  if (!(c.kick_cone_half_angle > 0 && c.kick_cone_half_angle <= 180)) {
    out.push_back("kick_cone_half_angle must be in (0, 180]");
  }
  return out;
}

SafetyConfig safety_config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text, nullptr, true, true);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed safety config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("safety config must be an object");
  SafetyConfig c;
  each_field(c, [&](const char* key, double& field) {
    auto it = j.find(key);
    if (it == j.end()) return;
    if (!it->is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
    field = it->get<double>();
  });
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    each_field(c, [&](const char* k, double&) { known = known || key == k; });
    if (!known) throw ConfigError("unknown safety config field '" + key + "'");
  }
  auto problems = validate(c);
  if (!problems.empty()) throw ConfigError(problems.front());
  return c;
}

std::string safety_config_to_json(const SafetyConfig& config) {
  SafetyConfig c = config;
  json j = json::object();
  each_field(c, [&](const char* key, double& field) { j[key] = field; });
  return j.dump(2);
}

SafetyConfig load_safety_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open safety config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return safety_config_from_json(ss.str());
}

}  // namespace robojs::safety

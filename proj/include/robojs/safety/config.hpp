// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace robojs::safety {

/// Limits enforced between programs and robots. Meters, seconds, degrees.
struct SafetyConfig {
  double max_speed = 1.0;            // m/s, planar
  double hardware_speed_cap = 4.0;   // m/s, informational
  double max_angular_speed = 360.0;  // deg/s
  double max_decel = 2.0;            // m/s^2, braking assumed by crash prevention
  double command_timeout = 5.0;      // s without a command before a halt
  double control_period = 1.0 / 60.0;
  double safety_margin = 0.05;       // m beyond two robot radii
  double field_half_x = 1.8;
  double field_half_y = 1.2;
  double robot_radius = 0.09;
  double kick_max_dist = 0.25;       // m, robot center to ball center
  double kick_cone_half_angle = 30.0;

  double limit_x() const { return field_half_x - robot_radius; }
  double limit_y() const { return field_half_y - robot_radius; }
  double min_separation() const { return 2 * robot_radius + safety_margin; }
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Violated invariants; empty when the config is usable.
std::vector<std::string> validate(const SafetyConfig& config);

/// Parses a config document. Missing fields keep their defaults; comments
/// are allowed. Throws ConfigError.
SafetyConfig safety_config_from_json(const std::string& text);
std::string safety_config_to_json(const SafetyConfig& config);
SafetyConfig load_safety_config(const std::string& path);

}  // namespace robojs::safety

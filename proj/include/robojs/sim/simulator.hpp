// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "robojs/sim/kinematics.hpp"
#include "robojs/sim/scenario.hpp"
#include "robojs/sim/world_state.hpp"

namespace robojs::sim {

struct FieldGeometry {
  double half_x = 1.8;
  double half_y = 1.2;
  double ball_radius = 0.0215;
};

struct RobotModel {
  double radius = 0.09;
  double max_accel = 2.0;          // m/s^2, also the braking limit
  double dribbler_range = 0.12;    // m from the robot center
  double kick_speed_per_power = 2.0;
  double ball_friction = 0.5;      // m/s^2 rolling deceleration
  double ball_restitution = 0.5;   // at walls and the field edge
};

/// What the safety layer lets one robot do during one period.
struct Actuation {
  int robot_id = 0;
  Vec2 velocity;       // commanded planar velocity
  double omega = 0;    // deg/s
  bool stop_now = false;  // brake to rest immediately
  std::optional<double> kick_power;
  bool dribble = false;
};

struct Segment {
  Vec2 a;
  Vec2 b;
};

/// Static surroundings of a world: geometry, model and maze walls.
struct Environment {
  FieldGeometry field;
  RobotModel model;
  std::vector<Segment> walls;
};

/// Wall segments for the cell pairs of a scenario, on the same grid the
/// robot API uses.
std::vector<Segment> wall_segments(const ScenarioConfig& config,
                                   const FieldGeometry& field = {});

/// One fixed step. Robots without an actuation keep their commanded
/// velocity at zero.
WorldState step(const WorldState& world, const std::vector<Actuation>& actuations,
                double dt, const Environment& env);

class Simulator {
 public:
  static constexpr double kDt = 1.0 / 60.0;

  explicit Simulator(const ScenarioConfig& scenario, std::optional<std::uint32_t> seed = {},
                     RobotModel model = {});

  const WorldState& world() const { return world_; }
  const ScenarioConfig& scenario() const { return scenario_; }
  const Environment& environment() const { return env_; }
  /// Items not yet touched by a robot.
  const std::vector<Item>& items() const { return items_; }

  void step(const std::vector<Actuation>& actuations);
  /// Continues the clock of a previous world, so frame numbers and time
  /// keep increasing across scenario changes.
  void continue_clock(double timestamp, std::uint64_t frame_seq);

 private:
  ScenarioConfig scenario_;
  Environment env_;
  WorldState world_;
  std::vector<Item> items_;
};

}  // namespace robojs::sim

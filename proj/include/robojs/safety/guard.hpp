// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "robojs/net/command.hpp"
#include "robojs/safety/config.hpp"
#include "robojs/sim/kinematics.hpp"
#include "robojs/sim/simulator.hpp"
#include "robojs/sim/world_state.hpp"

namespace robojs::safety {

struct Rejection {
  std::string reason;  // one of net::reason
};

/// Admitted commands come back with targets truncated into the field.
using Admission = std::variant<net::CommandMsg, Rejection>;

Admission admit(const net::CommandMsg& cmd, const sim::WorldState& world,
                const SafetyConfig& config);

struct Velocity {
  double vx = 0, vy = 0;
  double omega = 0;  // deg/s
};

/// Scales planar speed down to max_speed, keeping direction, and clamps the
/// angular rate.
Velocity clamp_velocity(Velocity v, const SafetyConfig& config);

struct Proposal {
  int robot_id = 0;
  sim::Vec2 velocity;
  bool stop = false;  // robot is stopped in place this period
};

/// Polyline a robot sweeps when it is commanded `command` for one period and
/// then brakes at max_decel: samples within the period, the end of the
/// period, then the rest point.
std::vector<sim::Vec2> swept_path(sim::Motion start, sim::Vec2 command, const SafetyConfig& config);

/// Safe velocity for each proposal, in order. Robots of `world` without a
/// proposal are assumed to brake.
std::vector<sim::Vec2> crash_prevention(const std::vector<Proposal>& proposals,
                                        const sim::WorldState& world,
                                        const SafetyConfig& config);

struct RobotGuard {
  double last_command_time = 0;
  std::optional<net::CommandMsg> active;  // motion skill being executed
  bool dribble = false;
  std::optional<double> pending_kick;
  bool stop_pending = false;
  std::string owner;       // session that claimed the robot
  double owner_seen = 0;
  bool reserved = false;   // driven by a built-in policy
};

struct GuardState {
  std::map<int, RobotGuard> robots;
  sim::WorldState world;
};

/// Halts every robot whose last command is older than command_timeout.
/// Returns the ids halted by this call.
std::vector<int> timeout_supervisor(GuardState& state, double now, const SafetyConfig& config);

/// What the skill controller wants a robot to do this period.
struct Intent {
  sim::Vec2 velocity;
  double omega = 0;
};

/// Velocity that executes `skill` from `self`; zero once a target is reached.
Intent marionette(const net::CommandMsg& skill, const sim::RobotState& self,
                  const sim::BallState& ball, const SafetyConfig& config);

/// Sits between command senders and the simulator.
class Guard {
 public:
  struct Outcome {
    bool accepted = false;
    std::string reason;
    net::CommandMsg applied;
  };

  explicit Guard(SafetyConfig config = {});

  const SafetyConfig& config() const { return config_; }
  const GuardState& state() const { return state_; }

  /// Latest world; robots appearing for the first time are registered.
  void observe(const sim::WorldState& world);
  /// Marks a robot as driven by `owner` only.
  void reserve(int robot_id, const std::string& owner);

  Outcome command(const std::string& session, const net::CommandMsg& cmd, double now);
  /// Stops `robot_id` immediately. With `release`, the session gives the
  /// robot up.
  void halt(const std::string& session, int robot_id, bool release);
  /// Releases every robot held by `session` and stops them.
  void end_session(const std::string& session);

  /// One control period: timeouts, skills, speed limits, crash prevention.
  std::vector<sim::Actuation> control(double now);

 private:
  bool owned_by_other(const RobotGuard& g, const std::string& session, double now) const;

  SafetyConfig config_;
  GuardState state_;
};

}  // namespace robojs::safety

// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "robojs/safety/guard.hpp"

namespace robojs::safety {

namespace {

constexpr double kPi = 3.14159265358979323846;

double wrap(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

}  // namespace

Admission admit(const net::CommandMsg& cmd, const sim::WorldState& world,
                const SafetyConfig& config) {
  if (static_cast<int>(cmd.params.size()) != net::skill_param_count(cmd.skill) ||
      !std::all_of(cmd.params.begin(), cmd.params.end(),
                   [](double p) { return std::isfinite(p); })) {
    return Rejection{std::string(net::reason::kMalformed)};
  }
  const sim::RobotState* self = world.robot(cmd.robot_id);
  if (!self) return Rejection{std::string(net::reason::kUnknownRobot)};
  if (!self->available) return Rejection{std::string(net::reason::kRobotUnavailable)};

  net::CommandMsg out = cmd;
  switch (cmd.skill) {
    case net::Skill::MoveTo:
      out.params[0] = std::clamp(cmd.params[0], -config.limit_x(), config.limit_x());
      out.params[1] = std::clamp(cmd.params[1], -config.limit_y(), config.limit_y());
      out.params[2] = wrap(cmd.params[2]);
      break;
    case net::Skill::TurnTo:
      out.params[0] = wrap(cmd.params[0]);
      break;
    case net::Skill::Kick: {
      out.params[0] = std::clamp(cmd.params[0], 0.0, 1.0);
      double dx = world.ball.x - self->x;
      double dy = world.ball.y - self->y;
      double bearing = std::atan2(dy, dx) * 180.0 / kPi;
      if (std::hypot(dx, dy) > config.kick_max_dist ||
          std::abs(wrap(bearing - self->theta)) > config.kick_cone_half_angle) {
        return Rejection{std::string(net::reason::kKickNotApplicable)};
      }
      break;
    }
    case net::Skill::Dribble:
      out.params[0] = cmd.params[0] != 0 ? 1.0 : 0.0;
      break;
    default:
      break;
  }
  return out;
}

Velocity clamp_velocity(Velocity v, const SafetyConfig& config) {
  double speed = std::hypot(v.vx, v.vy);
  if (speed > config.max_speed) {
    double k = config.max_speed / speed;
    v.vx *= k;
    v.vy *= k;
    // Rounding can leave the product a hair above the cap.
    while (std::hypot(v.vx, v.vy) > config.max_speed) {
      v.vx = std::nextafter(v.vx, 0.0);
      v.vy = std::nextafter(v.vy, 0.0);
    }
  }
  v.omega = std::clamp(v.omega, -config.max_angular_speed, config.max_angular_speed);
  return v;
}

}  // namespace robojs::safety

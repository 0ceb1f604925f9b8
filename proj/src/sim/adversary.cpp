// SPDX-License-Identifier: Apache-2.0
#include "robojs/sim/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace robojs::sim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGoalLineX = 1.6;
constexpr double kGoalHalfWidth = 0.35;

double angle_to(double fx, double fy, double tx, double ty) {
  return std::atan2(ty - fy, tx - fx) * 180.0 / kPi;
}

net::CommandMsg move_to(int id, double x, double y, double theta) {
  return {id, net::Skill::MoveTo, {x, y, theta}, 0};
}

bool is_adversary(const std::vector<int>& robots, int id) {
  return std::find(robots.begin(), robots.end(), id) != robots.end();
}

}  // namespace

std::vector<net::CommandMsg> adversary_commands(const std::string& kind,
                                                const std::vector<int>& robots,
                                                const WorldState& world) {
  std::vector<net::CommandMsg> out;
  const BallState& ball = world.ball;
  if (kind == "chaser") {
    const RobotState* prey = nullptr;
    for (const auto& r : world.robots) {
      if (!is_adversary(robots, r.id)) {
        prey = &r;
        break;
      }
    }
    for (int id : robots) {
      const RobotState* self = world.robot(id);
      if (!self || !prey) continue;
      out.push_back(move_to(id, prey->x, prey->y, angle_to(self->x, self->y, prey->x, prey->y)));
    }
  } else if (kind == "goalie") {
    for (int id : robots) {
      double y = std::clamp(ball.y, -kGoalHalfWidth, kGoalHalfWidth);
      out.push_back(move_to(id, kGoalLineX, y, 180));
    }
  } else if (kind == "opponents") {
    // The robot nearest the ball attacks toward -x; the others hold a
    // defensive line level with the ball.
    int striker = -1;
    double best = 1e9;
    for (int id : robots) {
      const RobotState* self = world.robot(id);
      if (!self) continue;
      double d = std::hypot(self->x - ball.x, self->y - ball.y);
      if (d < best) {
        best = d;
        striker = id;
      }
    }
    for (int id : robots) {
      const RobotState* self = world.robot(id);
      if (!self) continue;
      if (id != striker) {
        out.push_back(move_to(id, 1.2, std::clamp(ball.y, -0.6, 0.6), 180));
        continue;
      }
      double facing = angle_to(ball.x, ball.y, -1.8, 0);
      double rad = facing * kPi / 180.0;
      if (best < 0.2) {
        double heading_error = std::remainder(self->theta - angle_to(self->x, self->y, ball.x, ball.y), 360.0);
        if (std::abs(heading_error) < 20) {
          out.push_back({id, net::Skill::Kick, {0.8}, 0});
          continue;
        }
      }
      // Line up just behind the ball, facing the far goal.
      out.push_back(move_to(id, ball.x - std::cos(rad) * 0.13, ball.y - std::sin(rad) * 0.13,
                            facing));
    }
  }
  return out;
}

}  // namespace robojs::sim

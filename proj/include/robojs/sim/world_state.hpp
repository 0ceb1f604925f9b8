// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace robojs::sim {

// Units: meters, seconds, degrees. Origin at field center, x along the long
// axis, angles counter-clockwise from +x in (-180, 180].

struct RobotState {
  int id = 0;
  double x = 0, y = 0, theta = 0;
  double vx = 0, vy = 0, omega = 0;
  bool available = true;

  bool operator==(const RobotState&) const = default;
};

struct BallState {
  double x = 0, y = 0;
  double vx = 0, vy = 0;

  bool operator==(const BallState&) const = default;
};

struct WorldState {
  double timestamp = 0;
  std::uint64_t frame_seq = 0;
  std::vector<RobotState> robots;
  BallState ball;

  const RobotState* robot(int id) const {
    for (const auto& r : robots) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }
  RobotState* robot(int id) {
    for (auto& r : robots) {
      if (r.id == id) return &r;
    }
    return nullptr;
  }

  bool operator==(const WorldState&) const = default;
};

}  // namespace robojs::sim

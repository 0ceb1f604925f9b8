// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "robojs/api/grid_map.hpp"
#include "robojs/exec/interpreter.hpp"
#include "robojs/exec/io_port.hpp"
#include "robojs/lang/diagnostic.hpp"
#include "robojs/sim/scenario.hpp"

namespace robojs::api {

struct ApiConfig {
  GridMap grid;
  double stale_after = 1.0;        // s; older frames are "no vision data"
  double position_tolerance = 0.02;  // m
  double angle_tolerance = 3.0;      // deg
  double motion_deadline = 20.0;     // s per blocking command
  double keepalive = 1.0;            // s between re-issued commands
  double contact_distance = 0.09 + 0.0215 + 0.02;  // robot center to ball center
};

/// Default config with the grid and maze walls of `scenario`.
ApiConfig api_config_for(const sim::ScenarioConfig& scenario);

/// One program's view of the robot it controls.
struct RobotSession {
  std::optional<int> robot_id;
  std::uint64_t next_request_id = 1;

  std::uint64_t take_request_id() { return next_request_id++; }
};

struct ApiError {
  lang::Category category;
  std::string message;
};

/// Normalizes an angle in degrees into (-180, 180].
double normalize_degrees(double degrees);

/// Translates a motion, skill or setup call into a robot command. Relative
/// and grid moves are resolved against `world`.
std::variant<exec::IoRequest, ApiError> to_request(
    std::string_view api_name, const std::vector<double>& args, RobotSession& session,
    const std::optional<exec::WorldSnapshot>& world, double now, const ApiConfig& config);

/// Value of a sense call.
std::variant<double, ApiError> sense(std::string_view api_name,
                                     const std::optional<exec::WorldSnapshot>& world,
                                     double now, const RobotSession& session,
                                     const ApiConfig& config);

/// Adds the `robot` namespace to `interp`, performing I/O through `port`.
/// The session and port must outlive the interpreter's runs. Runs that end
/// early halt the selected robot.
void install_robot_api(exec::Interpreter& interp, exec::IoPort& port,
                       RobotSession& session, ApiConfig config = {});

}  // namespace robojs::api

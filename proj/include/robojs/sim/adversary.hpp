// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "robojs/net/command.hpp"
#include "robojs/sim/world_state.hpp"

namespace robojs::sim {

/// Seconds between decisions of a built-in policy.
inline constexpr double kAdversaryPeriod = 0.25;

/// Commands the built-in policy `kind` ("chaser", "goalie" or "opponents")
/// issues for `robots` in `world`. Deterministic in its inputs.
std::vector<net::CommandMsg> adversary_commands(const std::string& kind,
                                                const std::vector<int>& robots,
                                                const WorldState& world);

}  // namespace robojs::sim

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace robojs::net {

enum class Skill { MoveTo, TurnTo, Kick, Dribble, Catch, Block, Halt, SetId };

std::string_view to_string(Skill skill);
std::optional<Skill> skill_from_string(std::string_view text);
/// Number of parameters the schema fixes for `skill`.
int skill_param_count(Skill skill);

/// A sequenced skill command. Parameters by skill:
///   MOVE_TO x y theta | TURN_TO theta | KICK power | DRIBBLE on(0/1)
///   CATCH, BLOCK, HALT, SET_ID: none
struct CommandMsg {
  int robot_id = 0;
  Skill skill = Skill::Halt;
  std::vector<double> params;
  std::uint64_t request_id = 0;

  bool operator==(const CommandMsg&) const = default;
};

/// Machine-readable rejection reasons carried by REJECT.
namespace reason {
inline constexpr std::string_view kRobotUnavailable = "robot-unavailable";
inline constexpr std::string_view kUnknownRobot = "unknown-robot";
inline constexpr std::string_view kKickNotApplicable = "kick-not-applicable";
inline constexpr std::string_view kMalformed = "malformed-command";
}  // namespace reason

}  // namespace robojs::net

// SPDX-License-Identifier: Apache-2.0
#include "robojs/net/command.hpp"

#include <array>
#include <utility>

namespace robojs::net {

namespace {

constexpr std::array kSkills = {
    std::pair{Skill::MoveTo, std::string_view{"MOVE_TO"}},
    std::pair{Skill::TurnTo, std::string_view{"TURN_TO"}},
    std::pair{Skill::Kick, std::string_view{"KICK"}},
    std::pair{Skill::Dribble, std::string_view{"DRIBBLE"}},
    std::pair{Skill::Catch, std::string_view{"CATCH"}},
    std::pair{Skill::Block, std::string_view{"BLOCK"}},
    std::pair{Skill::Halt, std::string_view{"HALT"}},
    std::pair{Skill::SetId, std::string_view{"SET_ID"}},
};

}  // namespace

std::string_view to_string(Skill skill) {
  for (auto [s, name] : kSkills) {
    if (s == skill) return name;
  }
  return "HALT";
}

std::optional<Skill> skill_from_string(std::string_view text) {
  for (auto [s, name] : kSkills) {
    if (name == text) return s;
  }
  return std::nullopt;
}

int skill_param_count(Skill skill) {
  switch (skill) {
    case Skill::MoveTo: return 3;
    case Skill::TurnTo:
    case Skill::Kick:
    case Skill::Dribble: return 1;
    default: return 0;
  }
}

}  // namespace robojs::net

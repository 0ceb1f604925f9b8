// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "robojs/host/field.hpp"
#include "robojs/sim/scenario.hpp"

namespace fuzz {

using namespace robojs;

struct Stats {
  double seconds = 0;
  long steps = 0;
  long commands = 0;
  long rejected = 0;
  long speed_violations = 0;
  long separation_violations = 0;
  long containment_violations = 0;
  long timeout_violations = 0;
  double min_separation = 1e9;
  double max_speed = 0;

  void merge(const Stats& o) {
    seconds += o.seconds;
    steps += o.steps;
    commands += o.commands;
    rejected += o.rejected;
    speed_violations += o.speed_violations;
    separation_violations += o.separation_violations;
    containment_violations += o.containment_violations;
    timeout_violations += o.timeout_violations;
    min_separation = std::min(min_separation, o.min_separation);
    max_speed = std::max(max_speed, o.max_speed);
  }
  bool clean() const {
    return speed_violations + separation_violations + containment_violations +
               timeout_violations == 0;
  }
};

/// Random robots on an open pitch, none closer than `gap`.
inline sim::ScenarioConfig random_pitch(std::mt19937& rng, int robots, double gap) {
  std::uniform_real_distribution<double> ux(-1.71, 1.71), uy(-1.11, 1.11), ut(-180, 180);
  sim::ScenarioConfig c;
  c.name = "fuzz";
  c.ball = {ux(rng) * 0.9, uy(rng) * 0.9};
  while (static_cast<int>(c.robots.size()) < robots) {
    double x = ux(rng), y = uy(rng);
    bool clear = std::hypot(x - c.ball.x, y - c.ball.y) > 0.12;
    for (const auto& r : c.robots) clear = clear && std::hypot(r.x - x, r.y - y) >= gap;
    if (clear) c.robots.push_back({static_cast<int>(c.robots.size()), x, y, ut(rng)});
  }
  return c;
}

/// Drives a field with random commands from one session per robot and
/// checks the guard's guarantees after every step against ground truth.
/// `robots` > 0 fixes the robot count on an open pitch; 0 mixes presets
/// and random pitches of 2 to 6 robots.
inline Stats run(std::uint32_t seed, double seconds, int robots = 0) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1);
  sim::ScenarioConfig sc;
  bool preset = robots == 0 && unit(rng) < 0.25;
  if (robots > 0) {
    sc = random_pitch(rng, robots, unit(rng) < 0.3 ? 0.23 : 0.4);
  } else if (preset) {
    static const char* names[] = {"tag", "penalty", "soccer-2v2", "maze", "collection"};
    sc = sim::load_scenario(names[rng() % 5]);
  } else {
    // Starts packed as tight as the invariant allows at times.
    double gap = unit(rng) < 0.3 ? 0.23 : 0.4;
    sc = random_pitch(rng, 2 + static_cast<int>(rng() % 5), gap);
  }
  host::Field field(sc, seed);
  const auto cfg = field.safety_config();
  const double limit_x = cfg.limit_x(), limit_y = cfg.limit_y();
  const double sep = cfg.min_separation();
  const double dt = sim::Simulator::kDt;

  std::map<int, double> last_command;  // accepted commands only
  std::map<int, double> quiet_until;   // robot's session silent until then
  std::uniform_real_distribution<double> tx(-2.5, 2.5), ty(-1.8, 1.8), ang(-400, 400);

  Stats s;
  const long steps = static_cast<long>(seconds / dt);
  for (long k = 0; k < steps; ++k) {
    double now = field.now();
    auto world = field.world();
    for (const auto& r : world.robots) {
      std::string session = "s" + std::to_string(r.id);
      if (now < quiet_until[r.id]) continue;
      if (unit(rng) > 0.08) continue;
      double pick = unit(rng);
      net::CommandMsg cmd{r.id, net::Skill::MoveTo, {}, static_cast<std::uint64_t>(k)};
      if (pick < 0.55) {
        cmd.params = {tx(rng), ty(rng), ang(rng)};
      } else if (pick < 0.62) {
        // Aim straight at a neighbour.
        const auto& o = world.robots[rng() % world.robots.size()];
        cmd.params = {o.x, o.y, 0};
      } else if (pick < 0.7) {
        cmd.skill = net::Skill::TurnTo;
        cmd.params = {ang(rng)};
      } else if (pick < 0.76) {
        cmd.skill = net::Skill::Kick;
        cmd.params = {unit(rng)};
      } else if (pick < 0.82) {
        cmd.skill = net::Skill::Dribble;
        cmd.params = {unit(rng) < 0.5 ? 0.0 : 1.0};
      } else if (pick < 0.87) {
        cmd.skill = net::Skill::Catch;
      } else if (pick < 0.92) {
        cmd.skill = net::Skill::Block;
      } else if (pick < 0.95) {
        cmd.skill = net::Skill::Halt;
      } else {
        // Go quiet long enough for the timeout to fire.
        quiet_until[r.id] = now + 4 + unit(rng) * 4;
        continue;
      }
      ++s.commands;
      auto out = field.command(session, cmd);
      if (out.accepted) {
        last_command[r.id] = now;
      } else {
        ++s.rejected;
      }
    }
    field.tick();
    ++s.steps;
    world = field.world();
    double t = world.timestamp;
    for (std::size_t i = 0; i < world.robots.size(); ++i) {
      const auto& r = world.robots[i];
      double speed = std::hypot(r.vx, r.vy);
      s.max_speed = std::max(s.max_speed, speed);
      if (speed > cfg.max_speed + 1e-9) ++s.speed_violations;
      if (std::abs(r.x) > limit_x + 1e-12 || std::abs(r.y) > limit_y + 1e-12) {
        ++s.containment_violations;
      }
      auto it = last_command.find(r.id);
      double last = it == last_command.end() ? -1e9 : it->second;
      bool adversary = std::count(sc.adversary_robots.begin(), sc.adversary_robots.end(), r.id);
      if (!adversary && t - last > cfg.command_timeout + dt + 1e-9 &&
          (speed != 0 || r.omega != 0)) {
        ++s.timeout_violations;
      }
      for (std::size_t j = i + 1; j < world.robots.size(); ++j) {
        const auto& o = world.robots[j];
        double d = std::hypot(r.x - o.x, r.y - o.y);
        s.min_separation = std::min(s.min_separation, d);
        if (d < sep - 1e-9) ++s.separation_violations;
      }
    }
  }
  s.seconds = steps * dt;
  return s;
}

}  // namespace fuzz

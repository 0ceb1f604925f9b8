// SPDX-License-Identifier: Apache-2.0
#include "robojs/safety/guard.hpp"

#include <algorithm>
#include <cmath>

namespace robojs::safety {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kArrive = 0.002;     // m; closer than this counts as there
constexpr double kApproachDecel = 1.5;  // m/s^2, below max_decel on purpose
constexpr double kTurnGain = 0.5;     // fraction of heading error per period

double wrap(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

double turn_toward(double theta, double want, const SafetyConfig& c) {
  double w = wrap(want - theta) / c.control_period * kTurnGain;
  return std::clamp(w, -c.max_angular_speed, c.max_angular_speed);
}

sim::Vec2 approach(const sim::RobotState& self, double x, double y, const SafetyConfig& c) {
  sim::Vec2 d{x - self.x, y - self.y};
  double dist = d.norm();
  if (dist < kArrive) return {};
  double speed = std::min({c.max_speed, std::sqrt(2 * kApproachDecel * dist),
                           dist / c.control_period});
  return d * (speed / dist);
}

double bearing(const sim::RobotState& self, const sim::BallState& ball) {
  return std::atan2(ball.y - self.y, ball.x - self.x) * 180.0 / kPi;
}

}  // namespace

std::vector<int> timeout_supervisor(GuardState& state, double now, const SafetyConfig& config) {
  std::vector<int> halted;
  for (auto& [id, g] : state.robots) {
    bool acting = g.active || g.dribble || g.pending_kick;
    if (acting && g.last_command_time < now - config.command_timeout) {
      g.active.reset();
      g.dribble = false;
      g.pending_kick.reset();
      g.stop_pending = true;
      halted.push_back(id);
    }
  }
  return halted;
}

Intent marionette(const net::CommandMsg& skill, const sim::RobotState& self,
                  const sim::BallState& ball, const SafetyConfig& config) {
  Intent out;
  switch (skill.skill) {
    case net::Skill::MoveTo:
      out.velocity = approach(self, skill.params[0], skill.params[1], config);
      out.omega = turn_toward(self.theta, skill.params[2], config);
      break;
    case net::Skill::TurnTo:
      out.omega = turn_toward(self.theta, skill.params[0], config);
      break;
    case net::Skill::Catch:
      out.omega = turn_toward(self.theta, bearing(self, ball), config);
      break;
    case net::Skill::Block: {
      double x = skill.params.empty() ? self.x : skill.params[0];
      double y = std::clamp(ball.y, -config.limit_y(), config.limit_y());
      out.velocity = approach(self, x, y, config);
      out.omega = turn_toward(self.theta, bearing(self, ball), config);
      break;
    }
    default:
      break;
  }
  return out;
}

Guard::Guard(SafetyConfig config) : config_(std::move(config)) {}

void Guard::observe(const sim::WorldState& world) {
  state_.world = world;
  for (const auto& r : world.robots) state_.robots.try_emplace(r.id);
}

void Guard::reserve(int robot_id, const std::string& owner) {
  auto& g = state_.robots[robot_id];
  g.owner = owner;
  g.reserved = true;
}

bool Guard::owned_by_other(const RobotGuard& g, const std::string& session, double now) const {
  if (g.owner.empty() || g.owner == session) return false;
  return g.reserved || now - g.owner_seen <= config_.command_timeout;
}

Guard::Outcome Guard::command(const std::string& session, const net::CommandMsg& cmd,
                              double now) {
  Outcome out;
  auto it = state_.robots.find(cmd.robot_id);
  if (it != state_.robots.end() && owned_by_other(it->second, session, now)) {
    out.reason = net::reason::kRobotUnavailable;
    return out;
  }
  Admission a = admit(cmd, state_.world, config_);
  if (auto* r = std::get_if<Rejection>(&a)) {
    out.reason = r->reason;
    return out;
  }
  out.accepted = true;
  out.applied = std::get<net::CommandMsg>(a);

  auto& g = state_.robots[cmd.robot_id];
  if (!g.reserved) g.owner = session;
  g.owner_seen = now;
  g.last_command_time = now;
  const sim::RobotState* self = state_.world.robot(cmd.robot_id);
  switch (out.applied.skill) {
    case net::Skill::MoveTo:
    case net::Skill::TurnTo:
    case net::Skill::Catch:
      g.active = out.applied;
      break;
    case net::Skill::Block:
      // Keep a Block command's x so tracking does not drift.
      if (!g.active || g.active->skill != net::Skill::Block) {
        g.active = out.applied;
        g.active->params = {self->x};
      }
      break;
    case net::Skill::Kick:
      g.active.reset();
      g.pending_kick = out.applied.params[0];
      break;
    case net::Skill::Dribble:
      g.dribble = out.applied.params[0] != 0;
      break;
    case net::Skill::Halt:
      g.active.reset();
      g.dribble = false;
      g.pending_kick.reset();
      g.stop_pending = true;
      break;
    case net::Skill::SetId:
      break;
  }
  return out;
}

void Guard::halt(const std::string& session, int robot_id, bool release) {
  auto it = state_.robots.find(robot_id);
  if (it == state_.robots.end()) return;
  auto& g = it->second;
  if (!g.owner.empty() && g.owner != session) return;
  g.active.reset();
  g.dribble = false;
  g.pending_kick.reset();
  g.stop_pending = true;
  if (release && !g.reserved) g.owner.clear();
}

void Guard::end_session(const std::string& session) {
  for (auto& [id, g] : state_.robots) {
    if (g.owner == session) halt(session, id, true);
  }
}

std::vector<sim::Actuation> Guard::control(double now) {
  timeout_supervisor(state_, now, config_);
  const auto& world = state_.world;
  std::vector<sim::Actuation> acts;
  std::vector<Proposal> proposals;
  for (const auto& r : world.robots) {
    auto& g = state_.robots[r.id];
    sim::Actuation a;
    a.robot_id = r.id;
    Proposal p;
    p.robot_id = r.id;
    if (g.stop_pending) {
      a.stop_now = p.stop = true;
      g.stop_pending = false;
    } else if (g.active) {
      Intent in = marionette(*g.active, r, world.ball, config_);
      Velocity v = clamp_velocity({in.velocity.x, in.velocity.y, in.omega}, config_);
      p.velocity = {v.vx, v.vy};
      a.omega = v.omega;
    }
    if (g.pending_kick) {
      a.kick_power = *g.pending_kick;
      g.pending_kick.reset();
    }
    a.dribble = g.dribble || (g.active && g.active->skill == net::Skill::Catch);
    acts.push_back(a);
    proposals.push_back(p);
  }
  auto safe = crash_prevention(proposals, world, config_);
  for (std::size_t i = 0; i < acts.size(); ++i) acts[i].velocity = safe[i];
  return acts;
}

}  // namespace robojs::safety

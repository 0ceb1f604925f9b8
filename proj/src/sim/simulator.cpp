// SPDX-License-Identifier: Apache-2.0
#include "robojs/sim/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace robojs::sim {

namespace {

constexpr double kPi = 3.14159265358979323846;

double normalize(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

Vec2 heading(double degrees) {
  double r = degrees * kPi / 180.0;
  return {std::cos(r), std::sin(r)};
}

double point_segment_distance(Vec2 p, const Segment& s) {
  return segment_distance(p, p, s.a, s.b);
}

bool robot_blocked(Vec2 p, const Environment& env) {
  double r = env.model.radius;
  if (std::abs(p.x) > env.field.half_x - r || std::abs(p.y) > env.field.half_y - r) {
    return true;
  }
  for (const auto& w : env.walls) {
    if (point_segment_distance(p, w) < r) return true;
  }
  return false;
}

void roll(BallState& b, double friction, double dt) {
  Vec2 v{b.vx, b.vy};
  double speed = v.norm();
  if (speed == 0) return;
  Vec2 dir = v * (1.0 / speed);
  if (speed <= friction * dt) {
    Vec2 p = Vec2{b.x, b.y} + dir * (speed * speed / (2 * friction));
    b.x = p.x;
    b.y = p.y;
    b.vx = b.vy = 0;
    return;
  }
  double travelled = speed * dt - 0.5 * friction * dt * dt;
  b.x += dir.x * travelled;
  b.y += dir.y * travelled;
  double left = speed - friction * dt;
  b.vx = dir.x * left;
  b.vy = dir.y * left;
}

void bounce_walls(BallState& b, Vec2 before, const Environment& env) {
  double br = env.field.ball_radius;
  for (const auto& w : env.walls) {
    if (segment_distance(before, {b.x, b.y}, w.a, w.b) >= br) continue;
    Vec2 along = w.b - w.a;
    double len = along.norm();
    if (len == 0) continue;
    Vec2 n{-along.y / len, along.x / len};
    Vec2 v{b.vx, b.vy};
    double vn = v.dot(n);
    v = v - n * ((1 + env.model.ball_restitution) * vn);
    b.x = before.x;
    b.y = before.y;
    b.vx = v.x;
    b.vy = v.y;
  }
  double lx = env.field.half_x - br;
  double ly = env.field.half_y - br;
  if (std::abs(b.x) > lx) {
    b.x = std::clamp(b.x, -lx, lx);
    b.vx = -b.vx * env.model.ball_restitution;
  }
  if (std::abs(b.y) > ly) {
    b.y = std::clamp(b.y, -ly, ly);
    b.vy = -b.vy * env.model.ball_restitution;
  }
}

/// Pushes the ball out of a robot disc; the ball takes on the robot's
/// velocity along the contact normal.
void push_ball(BallState& b, const RobotState& r, const Environment& env) {
  double contact = env.model.radius + env.field.ball_radius;
  Vec2 d{b.x - r.x, b.y - r.y};
  double dist = d.norm();
  if (dist >= contact) return;
  Vec2 n = dist > 0 ? d * (1.0 / dist) : heading(r.theta);
  b.x = r.x + n.x * contact;
  b.y = r.y + n.y * contact;
  Vec2 v{b.vx, b.vy};
  double robot_vn = Vec2{r.vx, r.vy}.dot(n);
  double ball_vn = v.dot(n);
  if (ball_vn < robot_vn) v = v + n * (robot_vn - ball_vn);
  b.vx = v.x;
  b.vy = v.y;
}

}  // namespace

std::vector<Segment> wall_segments(const ScenarioConfig& config, const FieldGeometry& field) {
  double cs = config.cell_size;
  int cols = static_cast<int>(std::floor(2 * field.half_x / cs + 1e-9));
  int rows = static_cast<int>(std::floor(2 * field.half_y / cs + 1e-9));
  double ox = -(cols - 1) * cs / 2;
  double oy = -(rows - 1) * cs / 2;
  std::vector<Segment> out;
  for (const auto& w : config.walls) {
    double mx = ox + (w.ax + w.bx) * cs / 2;
    double my = oy + (w.ay + w.by) * cs / 2;
    if (w.ax != w.bx) {
      out.push_back({{mx, my - cs / 2}, {mx, my + cs / 2}});
    } else {
      out.push_back({{mx - cs / 2, my}, {mx + cs / 2, my}});
    }
  }
  return out;
}

WorldState step(const WorldState& world, const std::vector<Actuation>& actuations, double dt,
                const Environment& env) {
  WorldState next = world;
  next.timestamp = world.timestamp + dt;
  next.frame_seq = world.frame_seq + 1;

  std::optional<Vec2> kick;
  const RobotState* dribbler = nullptr;

  for (auto& r : next.robots) {
    const Actuation* act = nullptr;
    for (const auto& a : actuations) {
      if (a.robot_id == r.id) act = &a;
    }
    Vec2 command = act ? act->velocity : Vec2{};
    if (act && act->stop_now) {
      r.vx = r.vy = r.omega = 0;
    } else {
      Motion m = integrate({{r.x, r.y}, {r.vx, r.vy}}, command, env.model.max_accel, dt);
      if (robot_blocked(m.p, env)) {
        r.vx = r.vy = 0;
      } else {
        r.x = m.p.x;
        r.y = m.p.y;
        r.vx = m.v.x;
        r.vy = m.v.y;
      }
      r.omega = act ? act->omega : 0;
      r.theta = normalize(r.theta + r.omega * dt);
    }
    if (act && act->kick_power) {
      kick = heading(r.theta) * (std::clamp(*act->kick_power, 0.0, 1.0) *
                                 env.model.kick_speed_per_power);
    }
    if (act && act->dribble) {
      Vec2 to_ball{world.ball.x - r.x, world.ball.y - r.y};
      if (to_ball.norm() <= env.model.dribbler_range &&
          to_ball.dot(heading(r.theta)) > 0) {
        dribbler = &r;
      }
    }
  }

  BallState& b = next.ball;
  Vec2 before{b.x, b.y};
  if (kick) {
    b.vx = kick->x;
    b.vy = kick->y;
  } else if (dribbler) {
    Vec2 face = Vec2{dribbler->x, dribbler->y} +
                heading(dribbler->theta) * (env.model.radius + env.field.ball_radius);
    b.x = face.x;
    b.y = face.y;
    b.vx = dribbler->vx;
    b.vy = dribbler->vy;
  } else {
    roll(b, env.model.ball_friction, dt);
    bounce_walls(b, before, env);
  }
  for (int pass = 0; pass < 3; ++pass) {
    for (const auto& r : next.robots) push_ball(b, r, env);
  }
  double lx = env.field.half_x - env.field.ball_radius;
  double ly = env.field.half_y - env.field.ball_radius;
  Vec2 pushed{b.x, b.y};
  b.x = std::clamp(b.x, -lx, lx);
  b.y = std::clamp(b.y, -ly, ly);
  if (Vec2{b.x, b.y} == pushed) return next;
  // A ball squeezed against the edge stops the robot pressing on it.
  double contact = env.model.radius + env.field.ball_radius - 1e-9;
  for (std::size_t i = 0; i < next.robots.size(); ++i) {
    auto& r = next.robots[i];
    if (std::hypot(b.x - r.x, b.y - r.y) >= contact) continue;
    r.x = world.robots[i].x;
    r.y = world.robots[i].y;
    r.vx = r.vy = 0;
    b.vx = b.vy = 0;
    push_ball(b, r, env);
    b.x = std::clamp(b.x, -lx, lx);
    b.y = std::clamp(b.y, -ly, ly);
  }
  return next;
}

Simulator::Simulator(const ScenarioConfig& scenario, std::optional<std::uint32_t> seed,
                     RobotModel model)
    : scenario_(resolve(scenario, seed)) {
  env_.model = model;
  env_.walls = wall_segments(scenario_, env_.field);
  world_ = initial_world(scenario_);
  items_ = scenario_.items;
}

void Simulator::step(const std::vector<Actuation>& actuations) {
  world_ = sim::step(world_, actuations, kDt, env_);
  double reach = env_.model.radius;
  std::erase_if(items_, [&](const Item& item) {
    for (const auto& r : world_.robots) {
      if (std::hypot(r.x - item.x, r.y - item.y) <= reach) return true;
    }
    return false;
  });
}

void Simulator::continue_clock(double timestamp, std::uint64_t frame_seq) {
  world_.timestamp = timestamp;
  world_.frame_seq = frame_seq;
}

}  // namespace robojs::sim

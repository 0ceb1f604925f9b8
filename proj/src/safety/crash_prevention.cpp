// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>

#include "robojs/safety/guard.hpp"

namespace robojs::safety {

namespace {

using sim::Motion;
using sim::Vec2;

constexpr double kPi = 3.14159265358979323846;
constexpr int kSubsteps = 4;
// Covers the gap between the sampled polyline and the true curve within a
// period (at most a*dt^2/128 for the sub-step chords).
constexpr double kSlack = 1e-5;

struct Path {
  std::vector<Vec2> pts;
  double lo_x, hi_x, lo_y, hi_y;

  explicit Path(std::vector<Vec2> p) : pts(std::move(p)) {
    lo_x = lo_y = std::numeric_limits<double>::infinity();
    hi_x = hi_y = -lo_x;
    for (auto q : pts) {
      lo_x = std::min(lo_x, q.x);
      hi_x = std::max(hi_x, q.x);
      lo_y = std::min(lo_y, q.y);
      hi_y = std::max(hi_y, q.y);
    }
  }
};

bool apart(const Path& a, const Path& b, double need) {
  double gx = std::max({0.0, a.lo_x - b.hi_x, b.lo_x - a.hi_x});
  double gy = std::max({0.0, a.lo_y - b.hi_y, b.lo_y - a.hi_y});
  if (std::hypot(gx, gy) >= need) return true;
  auto seg = [](const Path& p, std::size_t i) {
    std::size_t j = std::min(i + 1, p.pts.size() - 1);
    return std::pair{p.pts[i], p.pts[j]};
  };
  std::size_t na = std::max<std::size_t>(1, a.pts.size() - 1);
  std::size_t nb = std::max<std::size_t>(1, b.pts.size() - 1);
  for (std::size_t i = 0; i < na; ++i) {
    auto [p, q] = seg(a, i);
    for (std::size_t j = 0; j < nb; ++j) {
      auto [r, s] = seg(b, j);
      if (sim::segment_distance(p, q, r, s) < need) return false;
    }
  }
  return true;
}

bool inside(const Path& p, const SafetyConfig& c) {
  double lx = c.limit_x() - kSlack;
  double ly = c.limit_y() - kSlack;
  return p.lo_x >= -lx && p.hi_x <= lx && p.lo_y >= -ly && p.hi_y <= ly;
}

Vec2 rotate(Vec2 v, double degrees) {
  double r = degrees * kPi / 180.0;
  return {v.x * std::cos(r) - v.y * std::sin(r), v.x * std::sin(r) + v.y * std::cos(r)};
}

}  // namespace

std::vector<Vec2> swept_path(Motion start, Vec2 command, const SafetyConfig& config) {
  const double a = config.max_decel;
  const double dt = config.control_period;
  std::vector<Vec2> pts{start.p};
  for (int k = 1; k < kSubsteps; ++k) {
    pts.push_back(sim::integrate(start, command, a, dt * k / kSubsteps).p);
  }
  Motion end = sim::integrate(start, command, a, dt);
  pts.push_back(end.p);
  double speed = end.v.norm();
  if (speed > 0) {
    pts.push_back(end.p + end.v * (sim::stopping_distance(speed, a) / speed));
  }
  return pts;
}

std::vector<Vec2> crash_prevention(const std::vector<Proposal>& proposals,
                                   const sim::WorldState& world, const SafetyConfig& config) {
  const double need = config.min_separation() + kSlack;
  const std::size_t n = world.robots.size();

  std::vector<const Proposal*> wish(n, nullptr);
  for (const auto& p : proposals) {
    for (std::size_t i = 0; i < n; ++i) {
      if (world.robots[i].id == p.robot_id) wish[i] = &p;
    }
  }
  auto motion = [&](std::size_t i) {
    const auto& r = world.robots[i];
    return Motion{{r.x, r.y}, {r.vx, r.vy}};
  };
  std::vector<Path> paths;
  std::vector<Vec2> chosen(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (wish[i] && wish[i]->stop) {
      paths.emplace_back(std::vector<Vec2>{motion(i).p});
    } else {
      paths.emplace_back(swept_path(motion(i), {}, config));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!wish[i] || wish[i]->stop) continue;
    Vec2 want = wish[i]->velocity;
    double speed = want.norm();
    if (speed == 0) continue;

    std::vector<Vec2> candidates;
    for (double scale : {1.0, 0.75, 0.5, 0.25}) {
      for (int k = 0; k <= 6; ++k) {
        candidates.push_back(rotate(want * scale, 30.0 * k));
        if (k != 0 && k != 6) candidates.push_back(rotate(want * scale, -30.0 * k));
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vec2 a, Vec2 b) {
      return (a - want).norm() < (b - want).norm();
    });
    for (Vec2 c : candidates) {
      Path path(swept_path(motion(i), c, config));
      if (!inside(path, config)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (j != i) ok = apart(path, paths[j], need);
      }
      if (ok) {
        chosen[i] = c;
        paths[i] = std::move(path);
        break;
      }
    }
  }

  std::vector<Vec2> out;
  for (const auto& p : proposals) {
    Vec2 v{};
    for (std::size_t i = 0; i < n; ++i) {
      if (world.robots[i].id == p.robot_id) v = chosen[i];
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace robojs::safety

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

namespace robojs::sim {

struct Vec2 {
  double x = 0, y = 0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double k) const { return {x * k, y * k}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  bool operator==(const Vec2&) const = default;
};

/// Planar state of a point mass.
struct Motion {
  Vec2 p;
  Vec2 v;
};

/// Advances `m` by `dt` while its velocity approaches `command` at no more
/// than `accel`. Integration is exact for piecewise-constant acceleration,
/// so a prediction made with this function matches the simulator bit for
/// bit.
inline Motion integrate(Motion m, Vec2 command, double accel, double dt) {
  Vec2 dv = command - m.v;
  double gap = dv.norm();
  if (gap == 0) return {m.p + m.v * dt, m.v};
  Vec2 a = dv * (accel / gap);
  double tau = gap / accel;
  if (tau >= dt) return {m.p + m.v * dt + a * (0.5 * dt * dt), m.v + a * dt};
  Vec2 reached = m.p + m.v * tau + a * (0.5 * tau * tau);
  return {reached + command * (dt - tau), command};
}

/// Distance covered braking from speed `v` at `decel` to rest.
inline double stopping_distance(double v, double decel) { return v * v / (2 * decel); }

/// Shortest distance between segments ab and cd.
inline double segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  auto point_segment = [](Vec2 p, Vec2 s, Vec2 e) {
    Vec2 se = e - s;
    double len2 = se.dot(se);
    double t = len2 == 0 ? 0 : std::clamp((p - s).dot(se) / len2, 0.0, 1.0);
    return (p - (s + se * t)).norm();
  };
  auto cross = [](Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; };
  Vec2 r = b - a;
  Vec2 s = d - c;
  double denom = cross(r, s);
  if (denom != 0) {
    double t = cross(c - a, s) / denom;
    double u = cross(c - a, r) / denom;
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) return 0;
  }
  return std::min(std::min(point_segment(a, c, d), point_segment(b, c, d)),
                  std::min(point_segment(c, a, b), point_segment(d, a, b)));
}

}  // namespace robojs::sim

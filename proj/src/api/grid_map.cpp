// SPDX-License-Identifier: Apache-2.0
#include "robojs/api/grid_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace robojs::api {

GridMap::GridMap(double cell_size, double half_x, double half_y)
    : cell_size_(cell_size),
      cols_(static_cast<int>(std::floor(2 * half_x / cell_size + 1e-9))),
      rows_(static_cast<int>(std::floor(2 * half_y / cell_size + 1e-9))) {
  // center the grid so leftover space is split evenly
  origin_x_ = -(cols_ - 1) * cell_size_ / 2;
  origin_y_ = -(rows_ - 1) * cell_size_ / 2;
}

bool GridMap::contains(Cell c) const {
  return c.cx >= 0 && c.cy >= 0 && c.cx < cols_ && c.cy < rows_;
}

Cell GridMap::cell_of(double x, double y) const {
  int cx = static_cast<int>(std::lround((x - origin_x_) / cell_size_));
  int cy = static_cast<int>(std::lround((y - origin_y_) / cell_size_));
  return {std::clamp(cx, 0, cols_ - 1), std::clamp(cy, 0, rows_ - 1)};
}

bool GridMap::add_wall(Cell a, Cell b) {
  if (std::abs(a.cx - b.cx) + std::abs(a.cy - b.cy) != 1) return false;
  if (!contains(a) || !contains(b)) return false;
  if (!blocked(a, b)) walls_.push_back({a, b});
  return true;
}

bool GridMap::blocked(Cell a, Cell b) const {
  for (const auto& w : walls_) {
    if ((w.a == a && w.b == b) || (w.a == b && w.b == a)) return true;
  }
  return false;
}

Cell GridMap::step(Cell from, int dx, int dy, int n) const {
  Cell at = from;
  for (int i = 0; i < n; ++i) {
    Cell next{at.cx + dx, at.cy + dy};
    if (!contains(next) || blocked(at, next)) break;
    at = next;
  }
  return at;
}

}  // namespace robojs::api

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace robojs::api {

struct Cell {
  int cx = 0;
  int cy = 0;
  bool operator==(const Cell&) const = default;
};

/// A wall on the shared edge of two adjacent cells.
struct Wall {
  Cell a;
  Cell b;
};

/// Discrete grid laid over the field for beginner and intermediate moves.
/// Cell (0,0) is the corner cell at the most negative x and y.
class GridMap {
 public:
  GridMap() : GridMap(0.3, 1.8, 1.2) {}
  GridMap(double cell_size, double half_x, double half_y);

  double cell_size() const { return cell_size_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  double origin_x() const { return origin_x_; }  // center of cell (0,0)
  double origin_y() const { return origin_y_; }

  bool contains(Cell c) const;
  /// Nearest cell to a field position, clamped to the grid.
  Cell cell_of(double x, double y) const;
  double center_x(Cell c) const { return origin_x_ + c.cx * cell_size_; }
  double center_y(Cell c) const { return origin_y_ + c.cy * cell_size_; }

  /// Adds a wall between adjacent cells; returns false if not adjacent.
  bool add_wall(Cell a, Cell b);
  bool blocked(Cell a, Cell b) const;
  const std::vector<Wall>& walls() const { return walls_; }

  /// Walks up to `n` cells from `from` in direction (dx, dy), stopping
  /// before walls and the grid edge.
  Cell step(Cell from, int dx, int dy, int n) const;

 private:
  double cell_size_;
  int cols_;
  int rows_;
  double origin_x_;
  double origin_y_;
  std::vector<Wall> walls_;
};

}  // namespace robojs::api

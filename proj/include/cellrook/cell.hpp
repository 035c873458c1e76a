#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace cellrook {

/// A unit cell of the integer lattice, identified by its lower-left corner.
struct Cell {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Axis-aligned rectangle of cells, given by the lower-left cells of its
/// two diagonal corners (lo <= hi componentwise).
struct CellRect {
  Cell lo;
  Cell hi;

  int width() const { return hi.x - lo.x + 1; }
  int height() const { return hi.y - lo.y + 1; }
  int size() const { return width() * height(); }
  bool is_square() const { return width() == height(); }
  bool contains(Cell c) const {
    return lo.x <= c.x && c.x <= hi.x && lo.y <= c.y && c.y <= hi.y;
  }
  bool contains(const CellRect& r) const {
    return contains(r.lo) && contains(r.hi);
  }

  friend auto operator<=>(const CellRect&, const CellRect&) = default;
};

inline std::string to_string(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

inline std::string to_string(const CellRect& r) {
  return "[" + to_string(r.lo) + "," + to_string(r.hi) + "]";
}

}  // namespace cellrook

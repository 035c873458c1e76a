#pragma once

#include <cstdint>
#include <vector>

#include "cellrook/cell.hpp"

namespace cellrook {

enum class RunKind { Horizontal, Vertical };

/// Maximal straight segment of cells of a collection (a "row" or "column"
/// of the collection, which need not span the whole bounding rectangle).
struct Run {
  RunKind kind;
  Cell anchor;  // left-most (horizontal) or bottom-most (vertical) cell
  int length;
  int id;  // dense, from 0, per kind
};

/// Immutable, normalized collection of cells.
///
/// Construction translates the input so the minimal bounding rectangle has
/// lower-left cell (1,1), deduplicates, and precomputes occupancy bit rows,
/// 2-D prefix sums and the row/column run partition. The bounding rectangle
/// is capped at 64x64 so one 64-bit word per row always suffices.
class CellCollection {
 public:
  static constexpr int kMaxSide = 64;

  explicit CellCollection(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  int rank() const { return static_cast<int>(cells_.size()); }
  int width() const { return width_; }
  int height() const { return height_; }
  CellRect bounding() const { return {{1, 1}, {width_, height_}}; }

  bool contains(int x, int y) const {
    if (x < 1 || x > width_ || y < 1 || y > height_) return false;
    return (rows_[y - 1] >> (x - 1)) & 1u;
  }
  bool contains(Cell c) const { return contains(c.x, c.y); }

  /// Index of a cell in cells() (which is sorted by (x,y)), or -1.
  int index_of(Cell c) const {
    if (!contains(c)) return -1;
    return grid_[(c.y - 1) * width_ + (c.x - 1)];
  }

  /// Number of cells of the collection inside r (r may exceed the board).
  int cells_in(const CellRect& r) const;

  /// True iff every cell of r belongs to the collection. O(1).
  bool is_inner_interval(const CellRect& r) const {
    return cells_in(r) == r.size();
  }

  const std::vector<Run>& horizontal_runs() const { return hruns_; }
  const std::vector<Run>& vertical_runs() const { return vruns_; }

  /// Run ids for the cell at cells()[cell_index].
  int hrun_of(int cell_index) const { return hrun_of_[cell_index]; }
  int vrun_of(int cell_index) const { return vrun_of_[cell_index]; }
  int hrun_of(Cell c) const { return hrun_of_[index_of(c)]; }
  int vrun_of(Cell c) const { return vrun_of_[index_of(c)]; }

  friend bool operator==(const CellCollection& a, const CellCollection& b) {
    return a.cells_ == b.cells_;
  }

 private:
  std::vector<Cell> cells_;  // sorted by (x, y)
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint64_t> rows_;  // occupancy, bit x-1 of rows_[y-1]
  std::vector<int> grid_;            // (y-1)*width+(x-1) -> cell index or -1
  std::vector<int> prefix_;          // (width+1)*(height+1) prefix sums
  std::vector<Run> hruns_, vruns_;
  std::vector<int> hrun_of_, vrun_of_;  // per cell index
};

}  // namespace cellrook

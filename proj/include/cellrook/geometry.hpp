#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellrook/collection.hpp"

namespace cellrook {

/// All rectangles of cells of P that are maximal under inclusion, sorted by
/// (lo.y, lo.x, hi.y, hi.x). This ordering is the one canonical rook
/// configurations are defined against, so it must never change.
std::vector<CellRect> maximal_rectangles(const CellCollection& P);

/// Cells of one maximal rectangle that belong to no other maximal rectangle.
struct Residue {
  int rect_index;                // into maximal_rectangles(P)
  std::vector<Cell> cells;       // sorted by (x, y); may be empty
  std::vector<int> xs, ys;       // sorted distinct coordinates of cells
  bool is_grid;                  // cells == xs x ys

  bool empty() const { return cells.empty(); }
};

std::vector<Residue> residues(const CellCollection& P,
                              const std::vector<CellRect>& rects);
std::vector<Residue> residues(const CellCollection& P);

/// Rank-compaction of a grid residue onto a solid width x height rectangle,
/// with the cell correspondence in both directions (1-based glued coords).
class Gluing {
 public:
  Gluing(std::vector<int> xs, std::vector<int> ys);

  int width() const { return static_cast<int>(xs_.size()); }
  int height() const { return static_cast<int>(ys_.size()); }
  bool is_square() const { return width() == height(); }

  /// Residue cell -> glued cell (u, v), 1 <= u <= width, 1 <= v <= height.
  Cell to_glued(Cell c) const;
  /// Glued cell (u, v) -> residue cell.
  Cell from_glued(Cell uv) const;

  const std::vector<int>& col_values() const { return xs_; }
  const std::vector<int>& row_values() const { return ys_; }

 private:
  std::vector<int> xs_, ys_;
};

/// Gluing of a non-empty grid residue. Throws EmptyResidueError or
/// NotGridError otherwise.
Gluing gluing(const Residue& res);

/// One entry per non-empty residue, in maximal-rectangle order. The gluing
/// is absent when the residue is not a grid (then no rectangle gluing
/// exists). Entries need not be squares; callers inspect width/height.
struct StableSquare {
  int rect_index;
  std::optional<Gluing> gluing;
};

std::vector<StableSquare> stable_squares(const CellCollection& P);

/// How "horizontally/vertically aligned" is interpreted in the empty-residue
/// condition of domino-stability: same run of P (default), or same
/// coordinate row/column even across gaps.
enum class AlignmentMode { Run, Coordinate };

struct StabilityResult {
  bool stable = true;
  // Witness, populated when !stable:
  int rect_index = -1;        // failing maximal rectangle
  int condition = 0;          // 1 = residue gluing not a square, 2 = alignment
  std::optional<Cell> cell;   // failing cell for condition 2
  std::string detail;

  explicit operator bool() const { return stable; }
};

/// A collection is domino-stable when every non-empty residue glues to a
/// square, and every cell of a rectangle with empty residue is aligned with
/// exactly one horizontal-witness residue and exactly one vertical-witness
/// residue, and those two are distinct.
StabilityResult is_domino_stable(const CellCollection& P,
                                 AlignmentMode mode = AlignmentMode::Run);

/// Connected components under king adjacency (shared vertex suffices).
std::vector<std::vector<Cell>> weak_components(const CellCollection& P);
/// Connected components under edge adjacency (polyomino connectivity).
std::vector<std::vector<Cell>> strong_components(const CellCollection& P);

}  // namespace cellrook

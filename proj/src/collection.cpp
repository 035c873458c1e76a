#include "cellrook/collection.hpp"

#include <algorithm>
#include <limits>

#include "cellrook/errors.hpp"

namespace cellrook {

CellCollection::CellCollection(std::vector<Cell> cells) {
  if (cells.empty()) throw EmptyCollectionError();

  int min_x = std::numeric_limits<int>::max(), min_y = min_x;
  int max_x = std::numeric_limits<int>::min(), max_y = max_x;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
    max_x = std::max(max_x, c.x);
    max_y = std::max(max_y, c.y);
  }
  width_ = max_x - min_x + 1;
  height_ = max_y - min_y + 1;
  if (width_ > kMaxSide || height_ > kMaxSide) {
    throw BoardTooLargeError("bounding rectangle " + std::to_string(width_) +
                             "x" + std::to_string(height_) + " exceeds " +
                             std::to_string(kMaxSide) + "x" +
                             std::to_string(kMaxSide));
  }

  for (Cell& c : cells) {
    c.x -= min_x - 1;
    c.y -= min_y - 1;
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  cells_ = std::move(cells);

  rows_.assign(height_, 0);
  grid_.assign(static_cast<size_t>(width_) * height_, -1);
  for (int i = 0; i < rank(); ++i) {
    const Cell& c = cells_[i];
    rows_[c.y - 1] |= std::uint64_t{1} << (c.x - 1);
    grid_[(c.y - 1) * width_ + (c.x - 1)] = i;
  }

  prefix_.assign(static_cast<size_t>(width_ + 1) * (height_ + 1), 0);
  const int w1 = width_ + 1;
  for (int y = 1; y <= height_; ++y) {
    for (int x = 1; x <= width_; ++x) {
      prefix_[y * w1 + x] = (contains(x, y) ? 1 : 0) + prefix_[(y - 1) * w1 + x] +
                            prefix_[y * w1 + (x - 1)] -
                            prefix_[(y - 1) * w1 + (x - 1)];
    }
  }

  hrun_of_.assign(cells_.size(), -1);
  vrun_of_.assign(cells_.size(), -1);
  for (int y = 1; y <= height_; ++y) {
    for (int x = 1; x <= width_; ++x) {
      if (!contains(x, y) || contains(x - 1, y)) continue;
      int len = 0;
      while (contains(x + len, y)) ++len;
      int id = static_cast<int>(hruns_.size());
      hruns_.push_back({RunKind::Horizontal, {x, y}, len, id});
      for (int i = 0; i < len; ++i) hrun_of_[index_of({x + i, y})] = id;
    }
  }
  for (int x = 1; x <= width_; ++x) {
    for (int y = 1; y <= height_; ++y) {
      if (!contains(x, y) || contains(x, y - 1)) continue;
      int len = 0;
      while (contains(x, y + len)) ++len;
      int id = static_cast<int>(vruns_.size());
      vruns_.push_back({RunKind::Vertical, {x, y}, len, id});
      for (int i = 0; i < len; ++i) vrun_of_[index_of({x, y + i})] = id;
    }
  }
}

int CellCollection::cells_in(const CellRect& r) const {
  int x1 = std::max(r.lo.x, 1), y1 = std::max(r.lo.y, 1);
  int x2 = std::min(r.hi.x, width_), y2 = std::min(r.hi.y, height_);
  if (x1 > x2 || y1 > y2) return 0;
  const int w1 = width_ + 1;
  return prefix_[y2 * w1 + x2] - prefix_[(y1 - 1) * w1 + x2] -
         prefix_[y2 * w1 + (x1 - 1)] + prefix_[(y1 - 1) * w1 + (x1 - 1)];
}

}  // namespace cellrook

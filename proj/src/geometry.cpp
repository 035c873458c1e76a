#include "cellrook/geometry.hpp"

#include <algorithm>
#include <array>

#include "cellrook/errors.hpp"

namespace cellrook {

namespace {

bool extendable(const CellCollection& P, const CellRect& r) {
  const auto full = [&](CellRect e) { return P.cells_in(e) == e.size(); };
  return (r.lo.x > 1 && full({{r.lo.x - 1, r.lo.y}, {r.lo.x - 1, r.hi.y}})) ||
         (r.hi.x < P.width() &&
          full({{r.hi.x + 1, r.lo.y}, {r.hi.x + 1, r.hi.y}})) ||
         (r.lo.y > 1 && full({{r.lo.x, r.lo.y - 1}, {r.hi.x, r.lo.y - 1}})) ||
         (r.hi.y < P.height() &&
          full({{r.lo.x, r.hi.y + 1}, {r.hi.x, r.hi.y + 1}}));
}

}  // namespace

std::vector<CellRect> maximal_rectangles(const CellCollection& P) {
  const int w = P.width(), h = P.height();
  std::vector<int> colh(w + 2, 0);
  std::vector<CellRect> out;
  std::vector<std::pair<int, int>> stack;  // (start x, height)
  for (int y = 1; y <= h; ++y) {
    for (int x = 1; x <= w; ++x) colh[x] = P.contains(x, y) ? colh[x] + 1 : 0;
    stack.clear();
    for (int x = 1; x <= w + 1; ++x) {
      const int cur = (x == w + 1) ? 0 : colh[x];
      int start = x;
      while (!stack.empty() && stack.back().second > cur) {
        auto [sx, sh] = stack.back();
        stack.pop_back();
        CellRect r{{sx, y - sh + 1}, {x - 1, y}};
        // Width-maximal at this height and not extendable downward by
        // construction; keep it unless it can still grow upward.
        if (y == h || P.cells_in({{sx, y + 1}, {x - 1, y + 1}}) < r.width())
          out.push_back(r);
        start = sx;
      }
      if (cur > 0 && (stack.empty() || stack.back().second < cur))
        stack.emplace_back(start, cur);
    }
  }
  std::sort(out.begin(), out.end(), [](const CellRect& a, const CellRect& b) {
    return std::tie(a.lo.y, a.lo.x, a.hi.y, a.hi.x) <
           std::tie(b.lo.y, b.lo.x, b.hi.y, b.hi.x);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [&](const CellRect& r) { return extendable(P, r); });
  return out;
}

std::vector<Residue> residues(const CellCollection& P,
                              const std::vector<CellRect>& rects) {
  std::vector<int> cover(P.rank(), 0);
  for (const CellRect& r : rects)
    for (int y = r.lo.y; y <= r.hi.y; ++y)
      for (int x = r.lo.x; x <= r.hi.x; ++x) ++cover[P.index_of({x, y})];

  std::vector<Residue> out;
  out.reserve(rects.size());
  for (int i = 0; i < static_cast<int>(rects.size()); ++i) {
    Residue res;
    res.rect_index = i;
    const CellRect& r = rects[i];
    for (int y = r.lo.y; y <= r.hi.y; ++y)
      for (int x = r.lo.x; x <= r.hi.x; ++x)
        if (cover[P.index_of({x, y})] == 1) res.cells.push_back({x, y});
    std::sort(res.cells.begin(), res.cells.end());
    for (const Cell& c : res.cells) {
      if (res.xs.empty() || res.xs.back() != c.x) res.xs.push_back(c.x);
      res.ys.push_back(c.y);
    }
    std::sort(res.xs.begin(), res.xs.end());
    std::sort(res.ys.begin(), res.ys.end());
    res.ys.erase(std::unique(res.ys.begin(), res.ys.end()), res.ys.end());
    // cells is always a subset of xs x ys, so a size match means equality.
    res.is_grid =
        res.cells.size() == res.xs.size() * res.ys.size() && !res.cells.empty();
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<Residue> residues(const CellCollection& P) {
  return residues(P, maximal_rectangles(P));
}

Gluing::Gluing(std::vector<int> xs, std::vector<int> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {}

Cell Gluing::to_glued(Cell c) const {
  auto ix = std::lower_bound(xs_.begin(), xs_.end(), c.x);
  auto iy = std::lower_bound(ys_.begin(), ys_.end(), c.y);
  if (ix == xs_.end() || *ix != c.x || iy == ys_.end() || *iy != c.y)
    throw CellNotInCollectionError("cell " + to_string(c) +
                                   " is not part of the glued residue");
  return {static_cast<int>(ix - xs_.begin()) + 1,
          static_cast<int>(iy - ys_.begin()) + 1};
}

Cell Gluing::from_glued(Cell uv) const {
  if (uv.x < 1 || uv.x > width() || uv.y < 1 || uv.y > height())
    throw CellNotInCollectionError("glued cell " + to_string(uv) +
                                   " outside " + std::to_string(width()) +
                                   "x" + std::to_string(height()));
  return {xs_[uv.x - 1], ys_[uv.y - 1]};
}

Gluing gluing(const Residue& res) {
  if (res.cells.empty()) throw EmptyResidueError();
  if (!res.is_grid)
    throw NotGridError("residue of rectangle " +
                       std::to_string(res.rect_index + 1) +
                       " is not a full grid; gluing undefined");
  return Gluing(res.xs, res.ys);
}

std::vector<StableSquare> stable_squares(const CellCollection& P) {
  std::vector<StableSquare> out;
  for (const Residue& res : residues(P)) {
    if (res.empty()) continue;
    StableSquare s;
    s.rect_index = res.rect_index;
    if (res.is_grid) s.gluing = gluing(res);
    out.push_back(std::move(s));
  }
  return out;
}

StabilityResult is_domino_stable(const CellCollection& P, AlignmentMode mode) {
  const auto rects = maximal_rectangles(P);
  const auto res = residues(P, rects);
  const int p = static_cast<int>(rects.size());

  // Alignment keys present in each residue: run ids in Run mode,
  // coordinates in Coordinate mode.
  std::vector<std::vector<int>> hkeys(p), vkeys(p);
  for (int j = 0; j < p; ++j) {
    for (const Cell& c : res[j].cells) {
      if (mode == AlignmentMode::Run) {
        hkeys[j].push_back(P.hrun_of(c));
        vkeys[j].push_back(P.vrun_of(c));
      } else {
        hkeys[j].push_back(c.y);
        vkeys[j].push_back(c.x);
      }
    }
    std::sort(hkeys[j].begin(), hkeys[j].end());
    std::sort(vkeys[j].begin(), vkeys[j].end());
  }
  const auto has_key = [](const std::vector<int>& keys, int k) {
    return std::binary_search(keys.begin(), keys.end(), k);
  };

  StabilityResult fail;
  fail.stable = false;
  for (int i = 0; i < p; ++i) {
    if (!res[i].empty()) {
      if (!res[i].is_grid) {
        fail.rect_index = i;
        fail.condition = 1;
        fail.detail = "residue of B" + std::to_string(i + 1) +
                      " is not a grid; gluing undefined";
        return fail;
      }
      const int gw = static_cast<int>(res[i].xs.size());
      const int gh = static_cast<int>(res[i].ys.size());
      if (gw != gh) {
        fail.rect_index = i;
        fail.condition = 1;
        fail.detail = "gluing of residue of B" + std::to_string(i + 1) +
                      " is " + std::to_string(gw) + "x" + std::to_string(gh) +
                      ", not a square";
        return fail;
      }
      continue;
    }
    for (int y = rects[i].lo.y; y <= rects[i].hi.y; ++y) {
      for (int x = rects[i].lo.x; x <= rects[i].hi.x; ++x) {
        const Cell c{x, y};
        const int hk = mode == AlignmentMode::Run ? P.hrun_of(c) : c.y;
        const int vk = mode == AlignmentMode::Run ? P.vrun_of(c) : c.x;
        int jh = -1, jv = -1, nh = 0, nv = 0;
        for (int j = 0; j < p; ++j) {
          if (j == i) continue;
          if (has_key(hkeys[j], hk)) ++nh, jh = j;
          if (has_key(vkeys[j], vk)) ++nv, jv = j;
        }
        if (nh != 1 || nv != 1 || jh == jv) {
          fail.rect_index = i;
          fail.condition = 2;
          fail.cell = c;
          fail.detail = "cell " + to_string(c) + " of B" +
                        std::to_string(i + 1) + " (empty residue) has " +
                        std::to_string(nh) + " horizontal and " +
                        std::to_string(nv) + " vertical residue witnesses" +
                        (nh == 1 && nv == 1 ? ", which coincide" : "");
          return fail;
        }
      }
    }
  }
  return {};
}

namespace {

std::vector<std::vector<Cell>> components(const CellCollection& P,
                                          bool king) {
  static constexpr std::array<std::pair<int, int>, 8> kOffsets = {
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
  const size_t limit = king ? kOffsets.size() : 4;

  std::vector<std::vector<Cell>> out;
  std::vector<char> visited(P.rank(), 0);
  std::vector<int> queue;
  for (int s = 0; s < P.rank(); ++s) {
    if (visited[s]) continue;
    visited[s] = 1;
    queue.assign(1, s);
    std::vector<Cell> comp;
    while (!queue.empty()) {
      const int i = queue.back();
      queue.pop_back();
      const Cell c = P.cells()[i];
      comp.push_back(c);
      for (size_t d = 0; d < limit; ++d) {
        const int j = P.index_of({c.x + kOffsets[d].first,
                                  c.y + kOffsets[d].second});
        if (j >= 0 && !visited[j]) {
          visited[j] = 1;
          queue.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<Cell>> weak_components(const CellCollection& P) {
  return components(P, /*king=*/true);
}

std::vector<std::vector<Cell>> strong_components(const CellCollection& P) {
  return components(P, /*king=*/false);
}

}  // namespace cellrook

#pragma once

#include <set>
#include <string>
#include <vector>

#include "cellrook/rook.hpp"
#include "cellrook/shape_io.hpp"

namespace test {

inline cellrook::CellCollection shape(const std::string& grid) {
  return cellrook::parse_collection(grid, cellrook::ShapeFormat::Grid);
}

inline cellrook::Cell C(int x, int y) { return {x, y}; }

/// All configurations reachable from f by sequences of switches.
inline std::set<cellrook::RookConfig> switch_closure(
    const cellrook::CellCollection& P, cellrook::RookConfig f) {
  std::sort(f.begin(), f.end());
  std::set<cellrook::RookConfig> seen{f};
  std::vector<cellrook::RookConfig> frontier{f};
  while (!frontier.empty()) {
    cellrook::RookConfig cur = std::move(frontier.back());
    frontier.pop_back();
    for (auto& g : cellrook::switch_neighbors(P, cur))
      if (seen.insert(g).second) frontier.push_back(g);
  }
  return seen;
}

/// Independent maximum non-attacking placement size: plain backtracking,
/// no matching involved.
inline int brute_force_rook_number(const cellrook::CellCollection& P) {
  const int n = P.rank();
  std::vector<char> hused(P.horizontal_runs().size(), 0);
  std::vector<char> vused(P.vertical_runs().size(), 0);
  int best = 0;
  auto rec = [&](auto&& self, int first, int placed) -> void {
    best = std::max(best, placed);
    for (int i = first; i < n; ++i) {
      const int h = P.hrun_of(i), v = P.vrun_of(i);
      if (hused[h] || vused[v]) continue;
      hused[h] = vused[v] = 1;
      self(self, i + 1, placed + 1);
      hused[h] = vused[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace test

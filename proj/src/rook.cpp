#include "cellrook/rook.hpp"

#include <algorithm>

#include "cellrook/errors.hpp"
#include "cellrook/matching.hpp"
#include "cellrook/union_find.hpp"

namespace cellrook {

namespace {

void require_in(const CellCollection& P, Cell c) {
  if (!P.contains(c))
    throw CellNotInCollectionError("cell " + to_string(c) +
                                   " is not in the collection");
}

// Backtracking over cells in sorted order with per-run used flags.
// Visits every k-subset of pairwise non-attacking cells in lexicographic
// order of the index lists. fn returning false stops the enumeration.
class ConfigEnumerator {
 public:
  ConfigEnumerator(const CellCollection& P, int k)
      : P_(P),
        k_(k),
        hused_(P.horizontal_runs().size(), 0),
        vused_(P.vertical_runs().size(), 0) {
    chosen_.reserve(k > 0 ? k : 1);
  }

  void run(const std::function<bool(const std::vector<std::uint16_t>&)>& fn) {
    fn_ = &fn;
    stopped_ = false;
    if (k_ == 0) {
      (*fn_)(chosen_);
      return;
    }
    recurse(0);
  }

 private:
  void recurse(int first) {
    const int n = P_.rank();
    const int need = k_ - static_cast<int>(chosen_.size());
    for (int i = first; i + need <= n && !stopped_; ++i) {
      const int h = P_.hrun_of(i), v = P_.vrun_of(i);
      if (hused_[h] || vused_[v]) continue;
      hused_[h] = vused_[v] = 1;
      chosen_.push_back(static_cast<std::uint16_t>(i));
      if (need == 1) {
        if (!(*fn_)(chosen_)) stopped_ = true;
      } else {
        recurse(i + 1);
      }
      chosen_.pop_back();
      hused_[h] = vused_[v] = 0;
    }
  }

  const CellCollection& P_;
  int k_;
  std::vector<char> hused_, vused_;
  std::vector<std::uint16_t> chosen_;
  const std::function<bool(const std::vector<std::uint16_t>&)>* fn_ = nullptr;
  bool stopped_ = false;
};

RookConfig cells_of(const CellCollection& P,
                    const std::vector<std::uint16_t>& indices) {
  RookConfig f;
  f.reserve(indices.size());
  for (std::uint16_t i : indices) f.push_back(P.cells()[i]);
  return f;
}

void check_k(const CellCollection& P, int k) {
  const int d = rook_number(P);
  if (k < 0 || k > d)
    throw KOutOfRangeError("k = " + std::to_string(k) +
                           " outside [0, " + std::to_string(d) + "]");
}

}  // namespace

bool attacking(const CellCollection& P, Cell a, Cell b) {
  require_in(P, a);
  require_in(P, b);
  if (a == b) return false;
  return P.hrun_of(a) == P.hrun_of(b) || P.vrun_of(a) == P.vrun_of(b);
}

bool is_valid_config(const CellCollection& P, const RookConfig& f) {
  std::vector<char> hused(P.horizontal_runs().size(), 0);
  std::vector<char> vused(P.vertical_runs().size(), 0);
  for (const Cell& c : f) {
    const int i = P.index_of(c);
    if (i < 0) return false;
    const int h = P.hrun_of(i), v = P.vrun_of(i);
    if (hused[h] || vused[v]) return false;
    hused[h] = vused[v] = 1;
  }
  return true;
}

int rook_number(const CellCollection& P) {
  std::vector<std::vector<int>> adj(P.horizontal_runs().size());
  for (int i = 0; i < P.rank(); ++i) adj[P.hrun_of(i)].push_back(P.vrun_of(i));
  return max_bipartite_matching(adj,
                                static_cast<int>(P.vertical_runs().size()));
}

void for_each_config(const CellCollection& P, int k,
                     const std::function<void(const RookConfig&)>& fn) {
  check_k(P, k);
  ConfigEnumerator(P, k).run([&](const std::vector<std::uint16_t>& idx) {
    fn(cells_of(P, idx));
    return true;
  });
}

std::vector<RookConfig> configs(const CellCollection& P, int k) {
  std::vector<RookConfig> out;
  for_each_config(P, k, [&](const RookConfig& f) { out.push_back(f); });
  return out;
}

std::vector<RookConfig> switch_neighbors(const CellCollection& P,
                                         const RookConfig& f) {
  if (!is_valid_config(P, f))
    throw InvalidConfigError("configuration is not non-attacking in P");
  RookConfig sorted = f;
  std::sort(sorted.begin(), sorted.end());

  std::vector<RookConfig> out;
  const int k = static_cast<int>(sorted.size());
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const Cell A = sorted[a], B = sorted[b];
      if (A.x == B.x || A.y == B.y) continue;
      const CellRect span{{std::min(A.x, B.x), std::min(A.y, B.y)},
                          {std::max(A.x, B.x), std::max(A.y, B.y)}};
      if (!P.is_inner_interval(span)) continue;
      RookConfig g = sorted;
      g[a] = {A.x, B.y};
      g[b] = {B.x, A.y};
      std::sort(g.begin(), g.end());
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t class_count(const CellCollection& P, int k) {
  check_k(P, k);
  if (k == 0) return 1;

  // Configurations as sorted cell-index arrays, flattened; enumeration
  // order is lexicographic, so neighbour lookup is a binary search.
  std::vector<std::uint16_t> flat;
  ConfigEnumerator(P, k).run([&](const std::vector<std::uint16_t>& idx) {
    flat.insert(flat.end(), idx.begin(), idx.end());
    return true;
  });
  const std::size_t n = flat.size() / k;
  if (k == 1) return n;

  const auto less_than = [&](std::size_t at, const std::uint16_t* key) {
    return std::lexicographical_compare(flat.begin() + at * k,
                                        flat.begin() + (at + 1) * k, key,
                                        key + k);
  };
  const auto locate = [&](const std::uint16_t* key) {
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (less_than(mid, key))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };

  UnionFind uf(n);
  std::vector<std::uint16_t> buf(k);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t* cfg = flat.data() + i * k;
    for (int a = 0; a < k; ++a) {
      const Cell A = P.cells()[cfg[a]];
      for (int b = a + 1; b < k; ++b) {
        const Cell B = P.cells()[cfg[b]];
        if (A.x == B.x || A.y == B.y) continue;
        const CellRect span{{std::min(A.x, B.x), std::min(A.y, B.y)},
                            {std::max(A.x, B.x), std::max(A.y, B.y)}};
        if (!P.is_inner_interval(span)) continue;
        std::copy(cfg, cfg + k, buf.begin());
        buf[a] = static_cast<std::uint16_t>(P.index_of({A.x, B.y}));
        buf[b] = static_cast<std::uint16_t>(P.index_of({B.x, A.y}));
        std::sort(buf.begin(), buf.end());
        uf.unite(i, locate(buf.data()));
      }
    }
  }
  return uf.component_count();
}

SwitchingPolynomial switching_polynomial(const CellCollection& P) {
  const int d = rook_number(P);
  SwitchingPolynomial poly;
  poly.coeffs.reserve(d + 1);
  for (int k = 0; k <= d; ++k) poly.coeffs.push_back(class_count(P, k));
  return poly;
}

std::string to_string(const SwitchingPolynomial& poly) {
  std::string out;
  for (int k = 0; k <= poly.degree(); ++k) {
    const std::uint64_t c = poly.coeffs[k];
    if (k > 0) out += " + ";
    if (k == 0 || c != 1) out += std::to_string(c);
    if (k == 1) out += "t";
    if (k >= 2) out += "t^" + std::to_string(k);
  }
  return out;
}

RookConfig canonical_in_rectangle(const CellRect& r, const RookConfig& f) {
  std::vector<int> xs, ys;
  xs.reserve(f.size());
  ys.reserve(f.size());
  for (const Cell& c : f) {
    if (!r.contains(c))
      throw InvalidConfigError("rook " + to_string(c) + " outside rectangle " +
                               to_string(r));
    xs.push_back(c.x);
    ys.push_back(c.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  RookConfig out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back({xs[i], ys[i]});
  return out;
}

RookConfig canonicalize(const CellCollection& P, const RookConfig& f) {
  if (!is_valid_config(P, f))
    throw InvalidConfigError("configuration is not non-attacking in P");
  RookConfig cur = f;
  std::sort(cur.begin(), cur.end());
  for (const CellRect& rect : maximal_rectangles(P)) {
    RookConfig inside, outside;
    for (const Cell& c : cur)
      (rect.contains(c) ? inside : outside).push_back(c);
    if (inside.size() < 2) continue;
    cur = std::move(outside);
    for (const Cell& c : canonical_in_rectangle(rect, inside))
      cur.push_back(c);
    std::sort(cur.begin(), cur.end());
  }
  return cur;
}

RookConfig square_complement(int n, const RookConfig& f) {
  if (n < 1) throw NotSquareBoardError("board side must be positive");
  if (static_cast<int>(f.size()) > n)
    throw NotSquareBoardError("more rooks than board side");
  RookConfig sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (const Cell& c : sorted)
    if (c.x < 1 || c.x > n || c.y < 1 || c.y > n)
      throw NotSquareBoardError("rook " + to_string(c) + " outside the " +
                                std::to_string(n) + "x" + std::to_string(n) +
                                " board");
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].x <= sorted[i - 1].x || sorted[i].y <= sorted[i - 1].y)
      throw NotCanonicalError(
          "rows and columns must be strictly increasing in a canonical "
          "configuration");

  std::vector<char> row_used(n + 1, 0), col_used(n + 1, 0);
  for (const Cell& c : sorted) {
    col_used[c.x] = 1;
    row_used[c.y] = 1;
  }
  std::vector<int> xs, ys;
  for (int i = 1; i <= n; ++i) {
    if (!col_used[i]) xs.push_back(i);
    if (!row_used[i]) ys.push_back(i);
  }
  RookConfig out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out.push_back({xs[i], ys[i]});
  return out;
}

RookConfig top_config(const CellCollection& P) {
  const StabilityResult st = is_domino_stable(P);
  if (!st.stable)
    throw NotDominoStableError("collection is not domino-stable: " +
                               st.detail);
  RookConfig out;
  for (const StableSquare& s : stable_squares(P)) {
    const Gluing& g = *s.gluing;
    for (int t = 1; t <= g.width(); ++t) out.push_back(g.from_glued({t, t}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cellrook

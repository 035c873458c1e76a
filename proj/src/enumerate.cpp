#include "cellrook/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cellrook/errors.hpp"

namespace cellrook {

namespace {

std::vector<Cell> normalized_sorted(std::vector<Cell> cells) {
  int min_x = cells[0].x, min_y = cells[0].y;
  for (const Cell& c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) {
    c.x -= min_x - 1;
    c.y -= min_y - 1;
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

// The 8 dihedral images as (x, y) |-> +/-x, +/-y with optional swap.
std::vector<Cell> transformed(const std::vector<Cell>& cells, int op) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const Cell& c : cells) {
    int x = (op & 4) ? c.y : c.x;
    int y = (op & 4) ? c.x : c.y;
    if (op & 1) x = -x;
    if (op & 2) y = -y;
    out.push_back({x, y});
  }
  return normalized_sorted(out);
}

std::vector<Cell> canonical_of(const std::vector<Cell>& normalized) {
  std::vector<Cell> best = normalized;
  for (int op = 1; op < 8; ++op) {
    std::vector<Cell> img = transformed(normalized, op);
    if (img < best) best = std::move(img);
  }
  return best;
}

// Redelmeier-style augmentation: grows connected cell sets from a root
// placed so that it is the (y, x)-least cell, which enumerates every
// translation class exactly once. Cells live on a (2n-1) x n board with
// the root at (n-1, 0); only cells with y > 0 or x >= root are reachable.
class Augmenter {
 public:
  struct State {
    std::vector<int> shape;    // chosen cell ids
    std::vector<int> untried;  // reachable frontier, in discovery order
    std::size_t next;          // resume position in untried
  };

  Augmenter(int rank, Universe universe)
      : n_(rank),
        board_w_(2 * rank - 1),
        root_x_(rank - 1),
        king_(universe == Universe::Collection),
        seen_(static_cast<std::size_t>(board_w_) * rank, 0) {}

  // Runs the full tree (split_depth 0) or just deep enough to collect the
  // states at the given depth into `splits`.
  void run(int split_depth, const std::function<void(State&&)>& on_split,
           const std::function<void(const std::vector<Cell>&)>& on_shape) {
    on_split_ = &on_split;
    on_shape_ = &on_shape;
    split_depth_ = split_depth;
    const int root = root_x_;  // (root_x_, 0)
    seen_[root] = 1;
    untried_.assign(1, root);
    shape_.clear();
    cells_buf_.resize(n_);
    recurse(0);
    seen_[root] = 0;
  }

  void resume(const State& state,
              const std::function<void(const std::vector<Cell>&)>& on_shape) {
    on_shape_ = &on_shape;
    split_depth_ = 0;
    shape_ = state.shape;
    untried_ = state.untried;
    for (int id : untried_) seen_[id] = 1;
    cells_buf_.resize(n_);

    // Re-enter the loop body at state.next: expand that cell's neighbours,
    // then continue with the remaining candidates.
    const std::size_t i = state.next;
    shape_.push_back(untried_[i]);
    const std::size_t mark = untried_.size();
    push_neighbors(untried_[i]);
    recurse(i + 1);
    retract(mark);
    shape_.pop_back();

    for (int id : state.untried) seen_[id] = 0;
  }

 private:
  void recurse(std::size_t from) {
    for (std::size_t i = from; i < untried_.size(); ++i) {
      if (split_depth_ > 0 &&
          static_cast<int>(shape_.size()) + 1 == split_depth_) {
        (*on_split_)(State{shape_, untried_, i});
        continue;
      }
      shape_.push_back(untried_[i]);
      if (static_cast<int>(shape_.size()) == n_) {
        emit();
      } else {
        const std::size_t mark = untried_.size();
        push_neighbors(untried_[i]);
        recurse(i + 1);
        retract(mark);
      }
      shape_.pop_back();
    }
  }

  void push_neighbors(int id) {
    static constexpr int dx[8] = {1, -1, 0, 0, 1, 1, -1, -1};
    static constexpr int dy[8] = {0, 0, 1, -1, 1, -1, 1, -1};
    const int x = id % board_w_, y = id / board_w_;
    const int count = king_ ? 8 : 4;
    for (int d = 0; d < count; ++d) {
      const int nx = x + dx[d], ny = y + dy[d];
      if (nx < 0 || nx >= board_w_ || ny < 0 || ny >= n_) continue;
      if (ny == 0 && nx < root_x_) continue;
      const int nid = ny * board_w_ + nx;
      if (seen_[nid]) continue;
      seen_[nid] = 1;
      untried_.push_back(nid);
    }
  }

  void retract(std::size_t mark) {
    while (untried_.size() > mark) {
      seen_[untried_.back()] = 0;
      untried_.pop_back();
    }
  }

  void emit() {
    for (int i = 0; i < n_; ++i)
      cells_buf_[i] = {shape_[i] % board_w_, shape_[i] / board_w_};
    (*on_shape_)(cells_buf_);
  }

  const int n_, board_w_, root_x_;
  const bool king_;
  std::vector<char> seen_;
  std::vector<int> untried_, shape_;
  std::vector<Cell> cells_buf_;
  int split_depth_ = 0;
  const std::function<void(State&&)>* on_split_ = nullptr;
  const std::function<void(const std::vector<Cell>&)>* on_shape_ = nullptr;
};

void check_rank(int rank) {
  if (rank < 1)
    throw RankOutOfRangeError("rank must be at least 1, got " +
                              std::to_string(rank));
  if (rank > 24)
    throw RankOutOfRangeError("rank " + std::to_string(rank) +
                              " is beyond the supported range");
}

// Keep exactly the shapes equal to their own canonical form.
void filter_and_emit(const std::vector<Cell>& raw,
                     const std::function<void(CellCollection&&)>& emit) {
  std::vector<Cell> norm = normalized_sorted(raw);
  if (canonical_of(norm) == norm) emit(CellCollection(std::move(norm)));
}

}  // namespace

std::vector<Cell> canonical_cells(const CellCollection& P) {
  return canonical_of(P.cells());
}

CellCollection canonical_form(const CellCollection& P) {
  return CellCollection(canonical_cells(P));
}

std::string shape_id(const CellCollection& P) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  const auto mix = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 1099511628211ull;
  };
  for (const Cell& c : canonical_cells(P)) {
    mix(static_cast<std::uint64_t>(c.x));
    mix(static_cast<std::uint64_t>(c.y));
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = digits[h & 0xf];
  return out;
}

void enumerate_shapes(int rank, Universe universe,
                      const std::function<void(CellCollection&&)>& emit) {
  check_rank(rank);
  Augmenter aug(rank, universe);
  aug.run(
      0, [](Augmenter::State&&) {},
      [&](const std::vector<Cell>& raw) { filter_and_emit(raw, emit); });
}

void enumerate_shapes_parallel(
    int rank, Universe universe, int jobs,
    const std::function<void(CellCollection&&)>& emit) {
  check_rank(rank);
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || rank <= 2) {
    enumerate_shapes(rank, universe, emit);
    return;
  }

  std::vector<Augmenter::State> splits;
  Augmenter collector(rank, universe);
  collector.run(
      2, [&](Augmenter::State&& s) { splits.push_back(std::move(s)); },
      [](const std::vector<Cell>&) {});

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      Augmenter aug(rank, universe);
      const auto on_shape = [&](const std::vector<Cell>& raw) {
        filter_and_emit(raw, emit);
      };
      for (std::size_t i = next.fetch_add(1); i < splits.size();
           i = next.fetch_add(1))
        aug.resume(splits[i], on_shape);
    });
  }
  for (auto& w : workers) w.join();
}

std::uint64_t count_shapes(int rank, Universe universe, int jobs) {
  std::atomic<std::uint64_t> count{0};
  enumerate_shapes_parallel(rank, universe, jobs, [&](CellCollection&&) {
    count.fetch_add(1, std::memory_order_relaxed);
  });
  return count.load();
}

}  // namespace cellrook

#include "cellrook/matching.hpp"

#include <limits>

namespace cellrook {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> match_left, match_right, dist;

  HopcroftKarp(const std::vector<std::vector<int>>& adj, int num_right)
      : adj(adj),
        match_left(adj.size(), -1),
        match_right(num_right, -1),
        dist(adj.size()) {}

  bool bfs() {
    std::vector<int> queue;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      dist[u] = match_left[u] == -1 ? 0 : kInf;
      if (dist[u] == 0) queue.push_back(u);
    }
    bool reachable_free = false;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : adj[u]) {
        const int w = match_right[v];
        if (w == -1) {
          reachable_free = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      const int w = match_right[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  }

  int run() {
    int size = 0;
    while (bfs())
      for (int u = 0; u < static_cast<int>(adj.size()); ++u)
        if (match_left[u] == -1 && dfs(u)) ++size;
    return size;
  }
};

}  // namespace

int max_bipartite_matching(const std::vector<std::vector<int>>& adj,
                           int num_right) {
  return HopcroftKarp(adj, num_right).run();
}

}  // namespace cellrook

#pragma once

#include <vector>

namespace cellrook {

/// Maximum cardinality matching in a bipartite graph (Hopcroft-Karp).
/// adj[u] lists the right-side neighbours of left vertex u; augmenting
/// passes scan vertices in ascending order, so the result is deterministic.
int max_bipartite_matching(const std::vector<std::vector<int>>& adj,
                           int num_right);

}  // namespace cellrook

#pragma once
// Planarity decisions. is_planar: left-right (LR) criterion test, linear-ish,
// decision only, any vertex count the graph types support, safe to call
// concurrently. is_planar_oracle: independent brute-force check via forbidden
// minors (no K5 minor and no K3,3 minor), exponential, n <= 9.
#include <utility>
#include <vector>

#include "pturan/graph.hpp"

namespace pturan {

// Core test on an explicit edge list (no parallel edges, no loops).
bool is_planar_edges(int n, const std::vector<std::pair<int, int>>& edges);

template <int W>
bool is_planar(const BasicGraph<W>& g) {
  return is_planar_edges(g.n(), g.edges());
}

bool is_planar_oracle(const Graph& g);  // throws std::invalid_argument if n > 9

}  // namespace pturan

#pragma once
// Randomized planar graph generation for property checks. Heuristic coverage,
// not uniform sampling: random vertex stacking builds a maximal planar graph,
// then random edge deletions shrink it until it avoids the target pattern.
#include <random>

#include "pturan/doublestar.hpp"
#include "pturan/graph.hpp"

namespace pturan {

// Maximal planar graph (3n-6 edges) grown by stacking each new vertex into a
// uniformly chosen face of the current triangulation. n >= 3.
Graph random_maximal_planar(int n, std::mt19937_64& rng);

// Delete uniformly random edges until the graph is S(m,k)-free.
Graph delete_until_free(Graph g, const DoubleStarPattern& p, std::mt19937_64& rng);

// Deterministic per-index generator stream.
inline std::mt19937_64 sample_rng(std::uint64_t base_seed, std::uint64_t index) {
  return std::mt19937_64(base_seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace pturan

#pragma once
// Exhaustive search for planar Turán values of double stars, plus reference
// enumeration helpers. The search explores isomorphism classes of pattern-free
// planar graphs bottom-up by single edge additions (both properties are
// closed under edge deletion, so every class is reachable from the empty
// graph); a global set of full canonical certificates deduplicates classes
// exactly. Values, class counts and retained witnesses are therefore
// schedule-independent.
#include <cstdint>
#include <functional>
#include <vector>

#include "pturan/doublestar.hpp"
#include "pturan/graph.hpp"

namespace pturan {

struct SearchConfig {
  int worker_count = 1;
  std::uint64_t node_budget = 0;  // max classes expanded; 0 = unlimited
  bool collect_extremal = true;   // witnesses + exact class count at the optimum
  int extremal_cap = 100;         // max witnesses retained (count stays exact)
};

struct ExactResult {
  int n;
  DoubleStarPattern pattern;
  int value = 0;
  bool exact = true;  // false iff the node budget truncated the search
  std::uint64_t extremal_class_count = 0;
  std::vector<Graph> extremal;  // capped, canonical byte order, re-verified
  std::uint64_t classes_visited = 0;
  std::uint64_t nodes_expanded = 0;
  double seconds = 0.0;
};

// Exact ex_P(n, S(m,k)) for 1 <= n <= 62 (sizes beyond ~12 need a budget and
// patience). Deterministic for every worker_count.
ExactResult exact_planar_turan(int n, const DoubleStarPattern& p, const SearchConfig& cfg = {});

// Reference value by brute force over all labeled graphs, using only the
// exhaustive containment oracle and the minor-based planarity oracle. n <= 6.
int naive_exact(int n, const DoubleStarPattern& p);

// All isomorphism classes of maximal planar graphs (triangulations) on n
// vertices, 3 <= n <= 10, via diagonal-flip exploration from a stacked seed.
std::vector<Graph> enumerate_maximal_planar(int n);

// Visit one representative per isomorphism class of graphs on n vertices
// satisfying `keep`, which must be closed under edge deletion. visit order is
// deterministic (breadth-first by edge count).
void for_each_class(int n, const std::function<bool(const Graph&)>& keep,
                    const std::function<void(const Graph&)>& visit);

}  // namespace pturan

#pragma once
// Exact canonical forms via individualization-refinement with automorphism
// pruning. Two one-word graphs receive equal canonical byte strings iff they
// are isomorphic. Discovered automorphism generators (from leaf-certificate
// collisions, verified before use) are returned for orbit computations; the
// generator list may be a proper subset of the full group, which only costs
// redundant search, never correctness.
#include <cstdint>
#include <string>
#include <vector>

#include "pturan/graph.hpp"

namespace pturan {

struct CanonicalForm {
  // bytes[0] = n, then the upper triangle of the canonical adjacency matrix in
  // row-major pair order (0,1),(0,2),...,(0,n-1),(1,2),... packed 8 bits/byte.
  std::string bytes;

  int n() const { return static_cast<unsigned char>(bytes.at(0)); }
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes < b.bytes;
  }
};

using Permutation = std::vector<std::uint8_t>;  // v -> image

struct CanonicalResult {
  CanonicalForm form;
  Graph canonical_graph;                // representative with the canonical labeling
  std::vector<Permutation> generators;  // verified automorphisms of the input graph
  std::uint64_t leaves_explored = 0;
};

CanonicalResult canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& form);

// Orbit partition of vertices under the group generated by `gens`: returns a
// vector where each vertex maps to the smallest vertex in its orbit.
std::vector<int> vertex_orbits(int n, const std::vector<Permutation>& gens);

}  // namespace pturan

#pragma once
// Parameterized lower-bound constructions. Every builder re-verifies its own
// output (edge count against the closed-form prediction, planarity, freeness
// from the target double star) and throws std::logic_error on any mismatch:
// a construction that does not self-verify is a bug, never a flag.
#include <string>

#include "pturan/doublestar.hpp"
#include "pturan/graph.hpp"

namespace pturan {

struct ConstructionReport {
  BigGraph graph;
  std::string family;
  long long predicted_edges;
  DoubleStarPattern free_of;
  bool verified_planar;  // result of running the planarity test
  bool verified_free;    // result of running the containment test
  std::string notes;
};

// Two nonadjacent hubs joined to all n-2 other vertices (complete bipartite
// K_{2,n-2}); 2n-4 edges, S(2,2)-free. n >= 4.
ConstructionReport k2_star(int n);

// Two nonadjacent hubs joined to all n-2 rim vertices, plus a maximum
// matching on the rim; floor-exact (5n-10)/2 resp. (5n-11)/2 edges,
// S(3,3)-free. n >= 4.
ConstructionReport matched_double_wheel(int n);

// The octahedron with one extra vertex stacked into a face: a 7-vertex
// triangulation with 15 edges, S(2,4)-free. Fixed size.
ConstructionReport seven_vertex_triangulation();

// The icosahedron: 12 vertices, 30 edges, 5-regular, S(3,4)-free. Fixed size.
ConstructionReport icosahedron();

// Layered triangle construction for S(3,5): n/3 stacked triangles joined by
// three vertical paths, plus a 6-edge cross-link bundle at every third layer;
// 2n-3 + 6*floor(n/9) edges. n >= 9 and divisible by 3. The report notes
// record the degree profile of the boundary layers, derived from the edge
// set.
ConstructionReport s35_layered(int n);

// Disjoint union of `copies` copies of `base` (freeness and planarity are
// preserved componentwise). copies * base.n() must fit the one-word graph
// type (<= 64 vertices; serialization additionally needs <= 62).
Graph disjoint_copies(const Graph& base, int copies);

}  // namespace pturan

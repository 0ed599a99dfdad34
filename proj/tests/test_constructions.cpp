#include <stdexcept>

#include "doctest.h"
#include "pturan/constructions.hpp"
#include "pturan/doublestar.hpp"
#include "pturan/graph.hpp"
#include "pturan/planarity.hpp"

using namespace pturan;

TEST_CASE("two-hub bipartite family") {
  for (int n : {4, 5, 6, 20, 63, 200}) {
    auto r = k2_star(n);
    CHECK(r.graph.n() == n);
    CHECK(r.graph.edge_count() == 2LL * n - 4);
    CHECK(r.predicted_edges == 2LL * n - 4);
    CHECK(r.verified_planar);
    CHECK(r.verified_free);
    CHECK(r.free_of == DoubleStarPattern(2, 2));
  }
  CHECK_THROWS_AS(k2_star(3), std::invalid_argument);
}

TEST_CASE("double wheel with rim matching") {
  auto even = matched_double_wheel(10);
  CHECK(even.graph.edge_count() == (5LL * 10 - 10) / 2);  // 20
  auto odd = matched_double_wheel(11);
  CHECK(odd.graph.edge_count() == (5LL * 11 - 11) / 2);  // 22
  for (int n : {4, 5, 7, 16, 41, 100}) {
    auto r = matched_double_wheel(n);
    long long want = (n % 2 == 0) ? (5LL * n - 10) / 2 : (5LL * n - 11) / 2;
    CHECK(r.graph.edge_count() == want);
    CHECK(r.verified_planar);
    CHECK(r.verified_free);
    CHECK(r.free_of == DoubleStarPattern(3, 3));
  }
  CHECK_THROWS_AS(matched_double_wheel(3), std::invalid_argument);
}

TEST_CASE("seven-vertex triangulation") {
  auto r = seven_vertex_triangulation();
  CHECK(r.graph.n() == 7);
  CHECK(r.graph.edge_count() == 15);  // 3n-6: a triangulation
  CHECK(r.verified_planar);
  CHECK(r.verified_free);
  CHECK(r.free_of == DoubleStarPattern(2, 4));
}

TEST_CASE("icosahedron") {
  auto r = icosahedron();
  CHECK(r.graph.n() == 12);
  CHECK(r.graph.edge_count() == 30);
  Graph g = shrink(r.graph);
  for (int v = 0; v < 12; ++v) CHECK(g.degree(v) == 5);
  CHECK(r.verified_planar);
  CHECK(r.verified_free);
  CHECK(r.free_of == DoubleStarPattern(3, 4));
}

TEST_CASE("layered triangle construction") {
  for (int n = 9; n <= 60; n += 3) {
    auto r = s35_layered(n);
    CHECK(r.graph.n() == n);
    CHECK(r.graph.edge_count() == 2LL * n - 3 + 6 * (n / 9));
    CHECK(r.verified_planar);
    CHECK(r.verified_free);
    CHECK(r.free_of == DoubleStarPattern(3, 5));
    CHECK_FALSE(r.notes.empty());
    // Every edge joining two degree-6 vertices lies in at least 3 triangles.
    Graph g = shrink(r.graph);
    for (auto [u, v] : g.edges())
      if (g.degree(u) == 6 && g.degree(v) == 6) CHECK(g.triangles_on_edge(u, v) >= 3);
  }
  CHECK_THROWS_AS(s35_layered(8), std::invalid_argument);
  CHECK_THROWS_AS(s35_layered(10), std::invalid_argument);
  CHECK_THROWS_AS(s35_layered(6), std::invalid_argument);
}

TEST_CASE("disjoint copies preserve planarity and freeness") {
  Graph base = shrink(seven_vertex_triangulation().graph);
  Graph g = disjoint_copies(base, 3);
  CHECK(g.n() == 21);
  CHECK(g.edge_count() == 45);
  CHECK(is_planar(g));
  CHECK(is_free(g, DoubleStarPattern(2, 4)));
  CHECK_FALSE(g.is_connected());
  CHECK(disjoint_copies(base, 1) == base);
  CHECK_THROWS_AS(disjoint_copies(base, 10), std::invalid_argument);  // 70 > 64
}

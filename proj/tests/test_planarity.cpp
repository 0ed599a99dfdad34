#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pturan/graph.hpp"
#include "pturan/planarity.hpp"
#include "pturan/search.hpp"

using namespace pturan;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
  return g;
}

Graph k33() {
  std::vector<std::pair<int, int>> e;
  for (int a : {0, 1, 2})
    for (int b : {3, 4, 5}) e.push_back({a, b});
  return Graph::from_edge_list(6, e);
}

Graph octahedron() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) e.push_back({u, v});
  std::erase(e, std::pair<int, int>{0, 1});
  std::erase(e, std::pair<int, int>{2, 3});
  std::erase(e, std::pair<int, int>{4, 5});
  return Graph::from_edge_list(6, e);
}

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edge_list(10, e);
}

Graph nth_graph(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g = g.with_edge(u, v);
  return g;
}

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g = g.with_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(is_planar(complete(4)));
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(k33()));
  CHECK(is_planar(octahedron()));
  CHECK(is_planar(complete(5).without_edge(3, 4)));
  CHECK_FALSE(is_planar(petersen()));
  CHECK_FALSE(is_planar(complete(6)));
  CHECK(is_planar(Graph(1)));
  CHECK(is_planar(Graph(10)));  // edgeless
}

TEST_CASE("minor-based oracle on named graphs") {
  CHECK(is_planar_oracle(complete(4)));
  CHECK_FALSE(is_planar_oracle(complete(5)));
  CHECK_FALSE(is_planar_oracle(k33()));
  CHECK(is_planar_oracle(octahedron()));
  // K3,3 with an edge subdivided: still has a K3,3 minor (n=7).
  Graph sub = k33().without_edge(0, 3);
  sub = Graph::from_edge_list(7, [&] {
    auto e = sub.edges();
    e.push_back({0, 6});
    e.push_back({6, 3});
    return e;
  }());
  CHECK_FALSE(is_planar_oracle(sub));
  CHECK_THROWS_AS(is_planar_oracle(Graph(10)), std::invalid_argument);
}

TEST_CASE("linear-time test agrees with the minor oracle exhaustively on 6 vertices") {
  for (unsigned long long m = 0; m < (1ull << 15); ++m) {
    Graph g = nth_graph(6, m);
    CHECK(is_planar(g) == is_planar_oracle(g));
  }
}

TEST_CASE("linear-time test agrees with the minor oracle on every 7-vertex class") {
  long classes = 0;
  for_each_class(
      7, [](const Graph&) { return true; },
      [&](const Graph& g) {
        ++classes;
        CHECK(is_planar(g) == is_planar_oracle(g));
      });
  CHECK(classes == 1044);
}

TEST_CASE("linear-time test agrees with the minor oracle on random graphs") {
  std::mt19937_64 rng(555);
  for (int n : {8, 9}) {
    for (int iter = 0; iter < 5500; ++iter) {
      // Mix densities around the planarity threshold.
      double p = 0.15 + 0.07 * (iter % 10);
      Graph g = random_graph(n, rng, p);
      CHECK(is_planar(g) == is_planar_oracle(g));
    }
  }
}

TEST_CASE("planarity is preserved by edge deletion") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 300; ++iter) {
    Graph g = random_graph(5 + static_cast<int>(rng() % 8), rng, 0.4);
    if (!is_planar(g)) continue;
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto [u, v] = edges[rng() % edges.size()];
    CHECK(is_planar(g.without_edge(u, v)));
  }
}

TEST_CASE("disconnected graphs") {
  // Two K4 blocks: planar. K5 plus isolated vertices: not.
  Graph two_k4(8);
  for (int b : {0, 4})
    for (int u = b; u < b + 4; ++u)
      for (int v = u + 1; v < b + 4; ++v) two_k4 = two_k4.with_edge(u, v);
  CHECK(is_planar(two_k4));

  Graph k5_iso(8);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5_iso = k5_iso.with_edge(u, v);
  CHECK_FALSE(is_planar(k5_iso));
}

TEST_CASE("edge-count shortcut never misfires near the threshold") {
  // Maximal planar graphs reach exactly 3n-6 edges; one more must fail.
  Graph oct = octahedron();  // 12 = 3*6-6 edges
  CHECK(is_planar(oct));
  CHECK_FALSE(is_planar(oct.with_edge(0, 1)));
}

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "pturan/canonical.hpp"
#include "pturan/graph.hpp"

using namespace pturan;

namespace {

Graph apply_perm(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h = h.with_edge(perm[u], perm[v]);
  return h;
}

// Ground-truth isomorphism test by trying every vertex permutation.
bool iso_brute(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (apply_perm(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph nth_graph(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g = g.with_edge(u, v);
  return g;
}

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g = g.with_edge(u, v);
  return g;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.has_edge(u, v) != g.has_edge(p[u], p[v])) return false;
  return true;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 25; ++iter) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng);
    CanonicalForm base = canonical_form(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int rep = 0; rep < 120; ++rep) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(apply_perm(g, perm)) == base);
    }
  }
}

TEST_CASE("canonical equality matches brute-force isomorphism on 4 vertices") {
  // All 64 labeled graphs on 4 vertices, pairwise.
  std::vector<Graph> all;
  for (unsigned long long m = 0; m < 64; ++m) all.push_back(nth_graph(4, m));
  std::vector<CanonicalForm> forms;
  for (const auto& g : all) forms.push_back(canonical_form(g));
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) {
      bool iso = iso_brute(all[i], all[j]);
      bool same = forms[i] == forms[j];
      CHECK(iso == same);
    }
}

TEST_CASE("canonical equality matches brute-force isomorphism on random 6-vertex pairs") {
  std::mt19937_64 rng(202);
  for (int iter = 0; iter < 60; ++iter) {
    Graph a = random_graph(6, rng);
    Graph b = random_graph(6, rng);
    CHECK(iso_brute(a, b) == (canonical_form(a) == canonical_form(b)));
  }
}

TEST_CASE("isomorphism class counts on up to 6 vertices") {
  // Classes of all simple graphs: 1, 2, 4, 11, 34, 156.
  const long expected[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> forms;
    int slots = n * (n - 1) / 2;
    for (unsigned long long m = 0; m < (1ull << slots); ++m)
      forms.insert(canonical_form(nth_graph(n, m)).bytes);
    CHECK(static_cast<long>(forms.size()) == expected[n]);
  }
}

TEST_CASE("canonical graph reconstructs from its byte form") {
  std::mt19937_64 rng(303);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_graph(3 + static_cast<int>(rng() % 7), rng);
    CanonicalResult r = canonicalize(g);
    Graph back = graph_from_canonical(r.form);
    CHECK(back == r.canonical_graph);
    CHECK(canonical_form(back) == r.form);
    CHECK(back.edge_count() == g.edge_count());
  }
}

TEST_CASE("reported generators are verified automorphisms") {
  // K4 has a rich automorphism group; discovered generators must all check out.
  Graph k4 = nth_graph(4, (1ull << 6) - 1);
  CanonicalResult r = canonicalize(k4);
  for (const auto& p : r.generators) CHECK(is_automorphism(k4, p));

  std::mt19937_64 rng(404);
  for (int iter = 0; iter < 40; ++iter) {
    Graph g = random_graph(7, rng, 0.3);
    for (const auto& p : canonicalize(g).generators) CHECK(is_automorphism(g, p));
  }
}

TEST_CASE("orbit computation from explicit generators") {
  // Swap (0 1) and swap (2 3) generate orbits {0,1} and {2,3}.
  std::vector<Permutation> gens = {{1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}};
  auto orb = vertex_orbits(5, gens);
  CHECK(orb[0] == orb[1]);
  CHECK(orb[2] == orb[3]);
  CHECK(orb[0] != orb[2]);
  CHECK(orb[4] != orb[0]);
  CHECK(orb[4] != orb[2]);

  // 4-cycle rotation: one orbit.
  auto orb2 = vertex_orbits(4, {{1, 2, 3, 0}});
  CHECK(orb2[0] == orb2[1]);
  CHECK(orb2[1] == orb2[2]);
  CHECK(orb2[2] == orb2[3]);
}

TEST_CASE("distinct small graphs receive distinct forms") {
  Graph path = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
  Graph tri_plus = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(canonical_form(path) != canonical_form(star));
  CHECK(canonical_form(path) != canonical_form(tri_plus));
  CHECK(canonical_form(star) != canonical_form(tri_plus));
}

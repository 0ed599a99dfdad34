#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "pturan/canonical.hpp"
#include "pturan/doublestar.hpp"
#include "pturan/graph.hpp"
#include "pturan/graph6.hpp"
#include "pturan/planarity.hpp"
#include "pturan/search.hpp"

using namespace pturan;

namespace {

Graph nth_graph(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g = g.with_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("reference values by brute force") {
  // Pattern too large to fit: the value is the planar maximum.
  CHECK(naive_exact(3, DoubleStarPattern(1, 1)) == 3);   // triangle
  CHECK(naive_exact(4, DoubleStarPattern(2, 2)) == 6);   // K4
  CHECK(naive_exact(5, DoubleStarPattern(2, 2)) == 9);   // 3*5-6
  // Pattern active: components must be triangles or stars.
  CHECK(naive_exact(6, DoubleStarPattern(1, 1)) == 6);   // two triangles
  CHECK(naive_exact(2, DoubleStarPattern(1, 1)) == 1);
  CHECK(naive_exact(1, DoubleStarPattern(1, 1)) == 0);
}

TEST_CASE("search equals brute force on every feasible small case") {
  for (int n = 1; n <= 5; ++n) {
    for (auto p : {DoubleStarPattern(1, 1), DoubleStarPattern(1, 2), DoubleStarPattern(2, 2)}) {
      ExactResult r = exact_planar_turan(n, p);
      CHECK(r.exact);
      CHECK(r.value == naive_exact(n, p));
    }
  }
  ExactResult r6 = exact_planar_turan(6, DoubleStarPattern(2, 2));
  CHECK(r6.exact);
  CHECK(r6.value == naive_exact(6, DoubleStarPattern(2, 2)));
}

TEST_CASE("extremal witnesses are sound") {
  ExactResult r = exact_planar_turan(6, DoubleStarPattern(2, 2));
  CHECK(r.extremal_class_count >= 1);
  CHECK(r.extremal.size() == r.extremal_class_count);  // under the default cap
  std::set<std::string> forms;
  for (const auto& g : r.extremal) {
    CHECK(g.n() == 6);
    CHECK(g.edge_count() == r.value);
    CHECK(is_planar(g));
    CHECK(is_free(g, DoubleStarPattern(2, 2)));
    forms.insert(canonical_form(g).bytes);
  }
  CHECK(forms.size() == r.extremal.size());  // pairwise non-isomorphic
}

TEST_CASE("worker count never changes the answer") {
  DoubleStarPattern p(1, 2);
  ExactResult base = exact_planar_turan(6, p, {.worker_count = 1});
  for (int workers : {2, 3}) {
    SearchConfig cfg;
    cfg.worker_count = workers;
    ExactResult r = exact_planar_turan(6, p, cfg);
    CHECK(r.value == base.value);
    CHECK(r.exact == base.exact);
    CHECK(r.extremal_class_count == base.extremal_class_count);
    REQUIRE(r.extremal.size() == base.extremal.size());
    for (size_t i = 0; i < r.extremal.size(); ++i)
      CHECK(to_graph6(r.extremal[i]) == to_graph6(base.extremal[i]));
  }
}

TEST_CASE("a node budget yields a declared lower bound") {
  SearchConfig cfg;
  cfg.node_budget = 2;
  ExactResult r = exact_planar_turan(6, DoubleStarPattern(2, 2), cfg);
  CHECK_FALSE(r.exact);
  ExactResult full = exact_planar_turan(6, DoubleStarPattern(2, 2));
  CHECK(r.value <= full.value);
}

TEST_CASE("skipping witness collection preserves the value") {
  SearchConfig cfg;
  cfg.collect_extremal = false;
  ExactResult r = exact_planar_turan(6, DoubleStarPattern(2, 2), cfg);
  ExactResult full = exact_planar_turan(6, DoubleStarPattern(2, 2));
  CHECK(r.value == full.value);
  CHECK(r.exact);
  CHECK(r.extremal.empty());
}

TEST_CASE("triangulation class counts") {
  const size_t expected[] = {0, 0, 0, 1, 1, 1, 2, 5, 14, 50};
  for (int n = 3; n <= 9; ++n) {
    auto all = enumerate_maximal_planar(n);
    CHECK(all.size() == expected[n]);
    std::set<std::string> forms;
    for (const auto& g : all) {
      CHECK(g.n() == n);
      CHECK(g.edge_count() == 3 * n - 6);
      CHECK(is_planar(g));
      forms.insert(canonical_form(g).bytes);
      // Maximality: adding any missing edge breaks planarity.
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) CHECK_FALSE(is_planar(g.with_edge(u, v)));
    }
    CHECK(forms.size() == all.size());
  }
}

TEST_CASE("triangulation classes cross-checked by labeled enumeration") {
  // Independently: enumerate every labeled graph with exactly 3n-6 edges,
  // filter by planarity, and deduplicate by canonical form. Any planar graph
  // with 3n-6 edges is maximal planar.
  for (int n : {6, 7}) {
    int slots = n * (n - 1) / 2;
    int want_edges = 3 * n - 6;
    std::set<std::string> forms;
    for (unsigned long long m = 0; m < (1ull << slots); ++m) {
      if (__builtin_popcountll(m) != want_edges) continue;
      Graph g = nth_graph(n, m);
      if (!is_planar(g)) continue;
      forms.insert(canonical_form(g).bytes);
    }
    CHECK(forms.size() == (n == 6 ? 2u : 5u));
    CHECK(forms.size() == enumerate_maximal_planar(n).size());
  }
}

TEST_CASE("class visitor enumerates isomorphism classes") {
  long count = 0;
  for_each_class(5, [](const Graph&) { return true; },
                 [&](const Graph&) { ++count; });
  CHECK(count == 34);

  // Restricted to pattern-free planar graphs the visitor's best edge count
  // reproduces the brute-force value.
  DoubleStarPattern p(1, 1);
  int best = 0;
  long visited = 0;
  for_each_class(
      5, [&](const Graph& g) { return is_planar(g) && is_free(g, p); },
      [&](const Graph& g) {
        ++visited;
        best = std::max(best, g.edge_count());
      });
  CHECK(best == naive_exact(5, p));
  CHECK(visited > 0);
}

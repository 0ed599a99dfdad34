#include "pturan/constructions.hpp"

#include <map>
#include <stdexcept>

#include "pturan/planarity.hpp"

namespace pturan {
namespace {

ConstructionReport make_verified(BigGraph g, std::string family, long long predicted,
                                 DoubleStarPattern free_of, std::string notes = "") {
  long long actual = g.edge_count();
  if (actual != predicted)
    throw std::logic_error(family + ": edge count " + std::to_string(actual) +
                           " != predicted " + std::to_string(predicted));
  bool planar = is_planar(g);
  if (!planar) throw std::logic_error(family + ": construction is not planar");
  bool free = is_free(g, free_of);
  if (!free) throw std::logic_error(family + ": construction contains S(" + free_of.to_string() +
                                    ")");
  return ConstructionReport{std::move(g), std::move(family), predicted, free_of, planar, free,
                            std::move(notes)};
}

void check_order(const char* family, int n, int lo) {
  if (n < lo)
    throw std::invalid_argument(std::string(family) + " needs n >= " + std::to_string(lo));
  if (n > BigGraph::kMaxVertices)
    throw std::invalid_argument(std::string(family) + " supports at most " +
                                std::to_string(BigGraph::kMaxVertices) + " vertices");
}

}  // namespace

ConstructionReport k2_star(int n) {
  check_order("k2_star", n, 4);
  BigGraph g(n);
  for (int v = 2; v < n; ++v) g = g.with_edge(0, v).with_edge(1, v);
  return make_verified(std::move(g), "k2_star(" + std::to_string(n) + ")", 2LL * n - 4,
                       DoubleStarPattern(2, 2));
}

ConstructionReport matched_double_wheel(int n) {
  check_order("matched_double_wheel", n, 4);
  BigGraph g(n);
  for (int v = 2; v < n; ++v) g = g.with_edge(0, v).with_edge(1, v);
  for (int v = 2; v + 1 < n; v += 2) g = g.with_edge(v, v + 1);
  long long predicted = n % 2 == 0 ? (5LL * n - 10) / 2 : (5LL * n - 11) / 2;
  return make_verified(std::move(g), "matched_double_wheel(" + std::to_string(n) + ")",
                       predicted, DoubleStarPattern(3, 3));
}

ConstructionReport seven_vertex_triangulation() {
  // Octahedron on 0..5 (antipodal non-edges 01, 23, 45) plus vertex 6 stacked
  // into face {0,2,4}.
  BigGraph g(7);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) {
      bool antipodal = (u == 0 && v == 1) || (u == 2 && v == 3) || (u == 4 && v == 5);
      if (!antipodal) g = g.with_edge(u, v);
    }
  g = g.with_edge(6, 0).with_edge(6, 2).with_edge(6, 4);
  return make_verified(std::move(g), "seven_vertex_triangulation", 15, DoubleStarPattern(2, 4));
}

ConstructionReport icosahedron() {
  BigGraph g(12);
  for (int i = 1; i <= 5; ++i) {
    g = g.with_edge(0, i);                              // top apex to upper ring
    g = g.with_edge(11, 5 + i);                         // bottom apex to lower ring
    g = g.with_edge(i, 1 + (i % 5));                    // upper 5-cycle
    g = g.with_edge(5 + i, 6 + (i % 5));                // lower 5-cycle
    g = g.with_edge(i, 5 + i).with_edge(i, 6 + (i % 5));  // antiprism band
  }
  return make_verified(std::move(g), "icosahedron", 30, DoubleStarPattern(3, 4));
}

ConstructionReport s35_layered(int n) {
  check_order("s35_layered", n, 9);
  if (n % 3 != 0) throw std::invalid_argument("s35_layered needs n divisible by 3");
  int layers = n / 3;
  // 1-based layer j: a_j, b_j, c_j at indices 3(j-1) + {0,1,2}.
  auto a = [](int j) { return 3 * (j - 1); };
  auto b = [](int j) { return 3 * (j - 1) + 1; };
  auto c = [](int j) { return 3 * (j - 1) + 2; };
  BigGraph g(n);
  for (int j = 1; j <= layers; ++j)
    g = g.with_edge(a(j), b(j)).with_edge(b(j), c(j)).with_edge(a(j), c(j));
  for (int j = 1; j < layers; ++j)
    g = g.with_edge(a(j), a(j + 1)).with_edge(b(j), b(j + 1)).with_edge(c(j), c(j + 1));
  for (int j = 3; j <= layers; j += 3) {
    g = g.with_edge(a(j), b(j - 1)).with_edge(a(j - 1), b(j - 2));
    g = g.with_edge(b(j), c(j - 1)).with_edge(b(j - 1), c(j - 2));
    g = g.with_edge(c(j), a(j - 1)).with_edge(c(j - 1), a(j - 2));
  }
  long long predicted = 2LL * n - 3 + 6LL * (n / 9);

  std::string notes = "boundary degrees first layer a,b,c = " + std::to_string(g.degree(a(1))) +
                      "," + std::to_string(g.degree(b(1))) + "," + std::to_string(g.degree(c(1))) +
                      "; last layer a,b,c = " + std::to_string(g.degree(a(layers))) + "," +
                      std::to_string(g.degree(b(layers))) + "," +
                      std::to_string(g.degree(c(layers))) + "; degree histogram:";
  std::map<int, int> hist;
  for (int v = 0; v < n; ++v) ++hist[g.degree(v)];
  for (auto [d, cnt] : hist) notes += " " + std::to_string(d) + "x" + std::to_string(cnt);

  return make_verified(std::move(g), "s35_layered(" + std::to_string(n) + ")", predicted,
                       DoubleStarPattern(3, 5), std::move(notes));
}

Graph disjoint_copies(const Graph& base, int copies) {
  if (copies < 1) throw std::invalid_argument("disjoint_copies needs copies >= 1");
  long long total = static_cast<long long>(base.n()) * copies;
  if (total > Graph::kMaxVertices)
    throw std::invalid_argument("disjoint_copies: " + std::to_string(total) +
                                " vertices exceed the 64-vertex graph type");
  Graph g(static_cast<int>(total));
  for (int c = 0; c < copies; ++c)
    for (auto [u, v] : base.edges()) g = g.with_edge(c * base.n() + u, c * base.n() + v);
  return g;
}

}  // namespace pturan

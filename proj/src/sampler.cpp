#include "pturan/sampler.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace pturan {

Graph random_maximal_planar(int n, std::mt19937_64& rng) {
  if (n < 3) throw std::invalid_argument("random_maximal_planar needs n >= 3");
  Graph g = Graph::from_edge_list(std::min(n, 3), {{0, 1}, {0, 2}, {1, 2}});
  if (n == 3) return g;
  // Both sides of the initial triangle are stackable faces.
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    std::size_t fi = pick(rng);
    auto [a, b, c] = faces[fi];
    faces.erase(faces.begin() + static_cast<long>(fi));
    Graph grown(v + 1);
    for (auto [x, y] : g.edges()) grown = grown.with_edge(x, y);
    g = grown.with_edge(v, a).with_edge(v, b).with_edge(v, c);
    faces.push_back({a, b, v});
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return g;
}

Graph delete_until_free(Graph g, const DoubleStarPattern& p, std::mt19937_64& rng) {
  while (!is_free(g, p)) {
    auto edges = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    auto [u, v] = edges[pick(rng)];
    g = g.without_edge(u, v);
  }
  return g;
}

}  // namespace pturan

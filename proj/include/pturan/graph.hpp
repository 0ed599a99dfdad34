#pragma once
// Simple undirected graphs as dense bitmask adjacency rows, value semantics.
// BasicGraph<1> (alias Graph) handles n <= 64 and is the type used by search,
// canonical forms and graph6. BasicGraph<4> (alias BigGraph) handles n <= 256
// for the large parameterized constructions.
#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pturan/mask.hpp"

namespace pturan {

template <int Words>
class BasicGraph {
 public:
  using VSet = VertexSet<Words>;
  static constexpr int kMaxVertices = VSet::kMaxVertices;

  explicit BasicGraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                  std::to_string(kMaxVertices) + "]");
    adj_.assign(n_, VSet{});
  }

  static BasicGraph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    BasicGraph g(n);
    for (auto [u, v] : edges) g.add_edge_in_place(u, v);
    return g;
  }

  int n() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  int degree(int v) const {
    check_vertex(v);
    return adj_[v].count();
  }

  const VSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
      adj_[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  // Number of common neighbors of x and y; xy must be an edge.
  int triangles_on_edge(int x, int y) const {
    if (!has_edge(x, y)) throw std::invalid_argument("triangles_on_edge: not an edge");
    return (adj_[x] & adj_[y]).count();
  }

  // For v in H: (edges from v into H, edges from v out of H).
  std::pair<int, int> edges_to_set(int v, const VSet& H) const {
    check_vertex(v);
    if (!H.test(v)) throw std::invalid_argument("edges_to_set: v not in H");
    int inner = (adj_[v] & H).count();
    return {inner, adj_[v].count() - inner};
  }

  int min_degree() const {
    int d = kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, adj_[v].count());
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, adj_[v].count());
    return d;
  }

  // Immutable edge updates: return modified copies.
  BasicGraph with_edge(int u, int v) const {
    BasicGraph g = *this;
    g.add_edge_in_place(u, v);
    return g;
  }
  BasicGraph without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    BasicGraph g = *this;
    g.adj_[u].reset(v);
    g.adj_[v].reset(u);
    return g;
  }

  bool is_connected() const {
    VSet all = VSet::first_n(n_);
    VSet reach = VSet::single(0);
    while (true) {
      VSet grown = reach;
      reach.for_each([&](int v) { grown |= adj_[v]; });
      grown &= all;
      if (grown == reach) break;
      reach = grown;
    }
    return reach == all;
  }

  friend bool operator==(const BasicGraph& a, const BasicGraph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0, " +
                                  std::to_string(n_ - 1) + "]");
  }
  void add_edge_in_place(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }

  int n_;
  std::vector<VSet> adj_;
};

using Graph = BasicGraph<1>;
using BigGraph = BasicGraph<4>;

// Copy a wide graph into the one-word type (requires n <= 64).
inline Graph shrink(const BigGraph& g) {
  if (g.n() > Graph::kMaxVertices)
    throw std::invalid_argument("graph too large for one-word representation");
  Graph out(g.n());
  for (auto [u, v] : g.edges()) out = out.with_edge(u, v);
  return out;
}

}  // namespace pturan

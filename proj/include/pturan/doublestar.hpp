#pragma once
// Double-star patterns and containment testing. The pattern S(m,k) is a tree
// on m+k+2 vertices: a backbone edge xy, m extra leaves at x, k extra leaves
// at y (subgraph containment, not induced). Patterns are stored canonically
// with m <= k.
//
// Fast path: a backbone edge xy hosts leaf counts (a,b) iff, writing
// A = N(x)\{y} and B = N(y)\{x}, we have |A| >= a, |B| >= b and
// |A u B| >= a+b. Necessity: the chosen leaves are distinct vertices drawn
// from A and B. Sufficiency: give each side its private neighbors first
// (A\B, B\A), then split the shared pool A n B; the union bound is exactly
// the condition for the split to cover both demands.
// contains_oracle cross-checks this by raw enumeration of leaf assignments.
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pturan/graph.hpp"

namespace pturan {

class DoubleStarPattern {
 public:
  DoubleStarPattern(int m, int k) : m_(std::min(m, k)), k_(std::max(m, k)) {
    if (m < 1 || k < 1) throw std::invalid_argument("double-star arms must be >= 1");
  }
  int m() const { return m_; }
  int k() const { return k_; }
  int vertex_count() const { return m_ + k_ + 2; }
  std::string to_string() const { return std::to_string(m_) + "," + std::to_string(k_); }

  // Parse "M,K"; throws std::invalid_argument on malformed input.
  static DoubleStarPattern parse(const std::string& text);

  friend bool operator==(const DoubleStarPattern&, const DoubleStarPattern&) = default;

 private:
  int m_, k_;
};

struct DoubleStarWitness {
  int x = -1, y = -1;            // backbone edge; x carries m leaves, y carries k
  std::vector<int> leaves_x, leaves_y;

  // Full structural re-check against a graph: backbone is an edge, leaf sets
  // have the right sizes, all m+k+2 vertices distinct, every leaf adjacent to
  // its endpoint.
  template <int W>
  bool validate(const BasicGraph<W>& g, const DoubleStarPattern& p) const;

  std::string to_string() const;
};

// Feasibility of hosting (a,b) leaves on the ordered backbone (x,y).
// Throws if xy is not an edge.
template <int W>
bool backbone_feasible(const BasicGraph<W>& g, int x, int y, int a, int b) {
  if (!g.has_edge(x, y)) throw std::invalid_argument("backbone_feasible: not an edge");
  auto A = g.neighbors(x);
  A.reset(y);
  auto B = g.neighbors(y);
  B.reset(x);
  return A.count() >= a && B.count() >= b && (A | B).count() >= a + b;
}

// First witness in deterministic scan order (edges lexicographic; orientation
// (m at x, k at y) before the swap; private neighbors then shared pool,
// lowest vertex index first), or nullopt if the graph is S(m,k)-free.
template <int W>
std::optional<DoubleStarWitness> contains_double_star(const BasicGraph<W>& g,
                                                      const DoubleStarPattern& p);

template <int W>
bool is_free(const BasicGraph<W>& g, const DoubleStarPattern& p) {
  return !contains_double_star(g, p).has_value();
}

// Independent exhaustive containment check: every ordered adjacent pair as
// backbone, every injective assignment of leaf sets (bitmask subset
// enumeration). No reliance on the counting criterion.
bool contains_oracle(const Graph& g, const DoubleStarPattern& p);

// After adding edge uv to a graph known to be S(m,k)-free, any new copy uses
// uv as backbone or as a leaf edge, so only backbones incident to u or v can
// have become feasible. g_plus must already contain uv.
template <int W>
bool stays_free_after_adding(const BasicGraph<W>& g_plus, const DoubleStarPattern& p, int u,
                             int v);

}  // namespace pturan

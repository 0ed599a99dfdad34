// Decision-only left-right planarity criterion test.
//
// Phase 1 (orientation): DFS orients each edge once, computing height,
// lowpt/lowpt2 per oriented edge and a nesting depth 2*lowpt (+1 for chordal
// edges). Phase 2 (testing): DFS in nesting order maintains a stack of
// conflict pairs of intervals of back edges; an interval pair that must nest
// on both sides of the spine witnesses nonplanarity. Embedding extras (side
// assignment) are omitted; ref chains are kept because interval trimming
// follows them.
#include <algorithm>
#include <vector>

#include "pturan/planarity.hpp"

namespace pturan {
namespace {

constexpr int kNone = -1;

struct Interval {
  int lo = kNone, hi = kNone;  // undirected edge ids of back edges
  bool empty() const { return lo == kNone && hi == kNone; }
};

struct ConflictPair {
  Interval L, R;
};

struct LRState {
  int n = 0, m = 0;
  std::vector<std::pair<int, int>> edge;   // undirected endpoints as given
  std::vector<std::vector<int>> inc;       // vertex -> incident undirected edge ids
  std::vector<int> height, parent_edge;    // per vertex
  std::vector<int> esrc, edst;             // orientation, kNone until oriented
  std::vector<int> lowpt, lowpt2, nesting; // per oriented edge
  std::vector<std::vector<int>> ordered;   // vertex -> outgoing edges by nesting
  std::vector<int> ref, lowpt_edge, stack_bottom;
  std::vector<ConflictPair> S;

  int other(int e, int v) const { return edge[e].first == v ? edge[e].second : edge[e].first; }

  void dfs_orient(int v) {
    int pe = parent_edge[v];
    for (int e : inc[v]) {
      if (esrc[e] != kNone) continue;
      esrc[e] = v;
      int w = other(e, v);
      edst[e] = w;
      lowpt[e] = height[v];
      lowpt2[e] = height[v];
      if (height[w] == kNone) {  // tree edge
        parent_edge[w] = e;
        height[w] = height[v] + 1;
        dfs_orient(w);
      } else {  // back edge to an ancestor
        lowpt[e] = height[w];
      }
      nesting[e] = 2 * lowpt[e];
      if (lowpt2[e] < height[v]) ++nesting[e];  // chordal
      if (pe != kNone) {
        if (lowpt[e] < lowpt[pe]) {
          lowpt2[pe] = std::min(lowpt[pe], lowpt2[e]);
          lowpt[pe] = lowpt[e];
        } else if (lowpt[e] > lowpt[pe]) {
          lowpt2[pe] = std::min(lowpt2[pe], lowpt[e]);
        } else {
          lowpt2[pe] = std::min(lowpt2[pe], lowpt2[e]);
        }
      }
    }
  }

  int lowest(const ConflictPair& p) const {
    if (p.L.empty()) return lowpt[p.R.lo];
    if (p.R.empty()) return lowpt[p.L.lo];
    return std::min(lowpt[p.L.lo], lowpt[p.R.lo]);
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt[i.hi] > lowpt[b];
  }

  bool add_constraints(int ei, int pe) {
    ConflictPair p;
    // Merge the return edges of ei into p.R.
    while (static_cast<int>(S.size()) > stack_bottom[ei]) {
      ConflictPair q = S.back();
      S.pop_back();
      if (!q.L.empty()) std::swap(q.L, q.R);
      if (!q.L.empty()) return false;
      if (lowpt[q.R.lo] > lowpt[pe]) {
        if (p.R.empty())
          p.R.hi = q.R.hi;
        else
          ref[p.R.lo] = q.R.hi;
        p.R.lo = q.R.lo;
      } else {  // align with the parent's lowpoint edge
        ref[q.R.lo] = lowpt_edge[pe];
      }
    }
    // Merge conflicting return edges of earlier siblings into p.L.
    while (!S.empty() && (conflicting(S.back().L, ei) || conflicting(S.back().R, ei))) {
      ConflictPair q = S.back();
      S.pop_back();
      if (conflicting(q.R, ei)) std::swap(q.L, q.R);
      if (conflicting(q.R, ei)) return false;
      // q.R returns at or below lowpt[ei]: chain it under p.R.
      if (!q.R.empty()) {
        if (p.R.empty())
          p.R = q.R;
        else {
          ref[p.R.lo] = q.R.hi;
          p.R.lo = q.R.lo;
        }
      }
      if (p.L.empty())
        p.L.hi = q.L.hi;
      else
        ref[p.L.lo] = q.L.hi;
      p.L.lo = q.L.lo;
    }
    if (!(p.L.empty() && p.R.empty())) S.push_back(p);
    return true;
  }

  void remove_back_edges(int pe) {
    int u = esrc[pe];
    // Drop conflict pairs whose lowest return point is u itself.
    while (!S.empty() && lowest(S.back()) == height[u]) S.pop_back();
    if (!S.empty()) {
      ConflictPair p = S.back();
      S.pop_back();
      while (p.L.hi != kNone && edst[p.L.hi] == u) p.L.hi = ref[p.L.hi];
      if (p.L.hi == kNone && p.L.lo != kNone) {  // interval just emptied
        ref[p.L.lo] = p.R.lo;
        p.L.lo = kNone;
      }
      while (p.R.hi != kNone && edst[p.R.hi] == u) p.R.hi = ref[p.R.hi];
      if (p.R.hi == kNone && p.R.lo != kNone) {
        ref[p.R.lo] = p.L.lo;
        p.R.lo = kNone;
      }
      S.push_back(p);
    }
    if (lowpt[pe] < height[u] && !S.empty()) {  // pe has a return edge
      int hl = S.back().L.hi, hr = S.back().R.hi;
      ref[pe] = (hl != kNone && (hr == kNone || lowpt[hl] > lowpt[hr])) ? hl : hr;
    }
  }

  bool dfs_test(int v) {
    int pe = parent_edge[v];
    const auto& out = ordered[v];
    for (std::size_t i = 0; i < out.size(); ++i) {
      int ei = out[i];
      int w = edst[ei];
      stack_bottom[ei] = static_cast<int>(S.size());
      if (ei == parent_edge[w]) {  // tree edge
        if (!dfs_test(w)) return false;
      } else {  // back edge
        lowpt_edge[ei] = ei;
        ConflictPair p;
        p.R.lo = p.R.hi = ei;
        S.push_back(p);
      }
      if (lowpt[ei] < height[v]) {  // ei has a return edge
        if (i == 0)
          lowpt_edge[pe] = lowpt_edge[ei];
        else if (!add_constraints(ei, pe))
          return false;
      }
    }
    if (pe != kNone) remove_back_edges(pe);
    return true;
  }
};

}  // namespace

bool is_planar_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  int m = static_cast<int>(edges.size());
  if (n <= 4) return true;           // every simple graph on <= 4 vertices
  if (m > 3 * n - 6) return false;   // edge-count ceiling, applied before the LR test

  thread_local LRState st;
  st.n = n;
  st.m = m;
  st.edge = edges;
  st.inc.assign(n, {});
  for (int e = 0; e < m; ++e) {
    st.inc[edges[e].first].push_back(e);
    st.inc[edges[e].second].push_back(e);
  }
  st.height.assign(n, kNone);
  st.parent_edge.assign(n, kNone);
  st.esrc.assign(m, kNone);
  st.edst.assign(m, kNone);
  st.lowpt.assign(m, 0);
  st.lowpt2.assign(m, 0);
  st.nesting.assign(m, 0);
  for (int v = 0; v < n; ++v)
    if (st.height[v] == kNone) {
      st.height[v] = 0;
      st.dfs_orient(v);
    }

  st.ordered.assign(n, {});
  for (int e = 0; e < m; ++e) st.ordered[st.esrc[e]].push_back(e);
  for (auto& lst : st.ordered)
    std::sort(lst.begin(), lst.end(), [&](int a, int b) {
      return st.nesting[a] != st.nesting[b] ? st.nesting[a] < st.nesting[b] : a < b;
    });

  st.ref.assign(m, kNone);
  st.lowpt_edge.assign(m, kNone);
  st.stack_bottom.assign(m, 0);
  st.S.clear();
  for (int v = 0; v < n; ++v)
    if (st.parent_edge[v] == kNone)
      if (!st.dfs_test(v)) return false;
  return true;
}

}  // namespace pturan

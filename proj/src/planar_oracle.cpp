// Brute-force planarity reference for n <= 9: a graph is planar iff it has
// neither a K5 minor nor a K3,3 minor. Branch sets are enumerated as connected
// vertex subsets (bitmasks); role symmetry is broken by requiring increasing
// minimum vertices, which disjointness makes equivalent to increasing position
// in a lowest-bit-sorted subset list. Completely independent of the
// left-right test: shares no code beyond the graph type.
#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pturan/planarity.hpp"

namespace pturan {
namespace {

// 512-bit row over subset indices.
struct Row {
  std::array<std::uint64_t, 8> w{};
  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
  Row operator&(const Row& o) const {
    Row r;
    for (int i = 0; i < 8; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  // Clear bits <= i.
  Row above(int i) const {
    if (i < 0) return *this;
    Row r = *this;
    int wi = i >> 6;
    for (int k = 0; k < wi; ++k) r.w[k] = 0;
    r.w[wi] &= ~((i & 63) == 63 ? ~0ULL : ((2ULL << (i & 63)) - 1));
    return r;
  }
  template <typename F>
  bool for_each(F&& f) const {  // stops early if f returns true
    for (int i = 0; i < 8; ++i) {
      std::uint64_t cur = w[i];
      while (cur) {
        if (f(64 * i + std::countr_zero(cur))) return true;
        cur &= cur - 1;
      }
    }
    return false;
  }
};

struct MinorCtx {
  int n;
  std::vector<std::uint16_t> vmask;  // vertex sets of connected subsets, sorted by lowest bit
  std::vector<std::uint16_t> nbr;    // union of members' neighborhoods
  std::vector<Row> dis;              // disjoint
  std::vector<Row> adjdis;           // disjoint and joined by an edge

  explicit MinorCtx(const Graph& g) : n(g.n()) {
    std::array<std::uint16_t, 9> adj{};
    for (int v = 0; v < n; ++v)
      g.neighbors(v).for_each([&](int w) { adj[v] |= std::uint16_t(1) << w; });
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t m = 1; m <= full; ++m) {
      // flood fill from the lowest member
      std::uint32_t reach = m & (~m + 1), grown;
      do {
        grown = reach;
        std::uint32_t cur = reach;
        while (cur) {
          int v = std::countr_zero(cur);
          cur &= cur - 1;
          grown |= adj[v] & m;
        }
        std::swap(reach, grown);
      } while (reach != grown);
      if (reach != m) continue;
      std::uint16_t nb = 0;
      std::uint32_t cur = m;
      while (cur) {
        int v = std::countr_zero(cur);
        cur &= cur - 1;
        nb |= adj[v];
      }
      vmask.push_back(static_cast<std::uint16_t>(m));
      nbr.push_back(nb);
    }
    // already sorted by lowest bit: masks ascend numerically and the lowest
    // set bit of m is nondecreasing... not in general; sort explicitly.
    std::vector<int> order(vmask.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      int la = std::countr_zero(static_cast<std::uint32_t>(vmask[a]));
      int lb = std::countr_zero(static_cast<std::uint32_t>(vmask[b]));
      return la != lb ? la < lb : vmask[a] < vmask[b];
    });
    std::vector<std::uint16_t> vm(vmask.size()), nb2(vmask.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      vm[i] = vmask[order[i]];
      nb2[i] = nbr[order[i]];
    }
    vmask = std::move(vm);
    nbr = std::move(nb2);

    int cnt = static_cast<int>(vmask.size());
    dis.assign(cnt, Row{});
    adjdis.assign(cnt, Row{});
    for (int i = 0; i < cnt; ++i)
      for (int j = 0; j < cnt; ++j) {
        if (i == j || (vmask[i] & vmask[j])) continue;
        dis[i].set(j);
        if (nbr[i] & vmask[j]) adjdis[i].set(j);
      }
  }

  int count() const { return static_cast<int>(vmask.size()); }

  // 5 pairwise disjoint, pairwise adjacent connected subsets.
  bool has_k5_rec(int depth, std::uint32_t used, int last, const Row& cand) const {
    if (depth == 5) return true;
    Row c = cand.above(last);
    return c.for_each([&](int i) {
      if (std::popcount(~used & ((1u << n) - 1)) < (5 - depth)) return false;
      if (has_k5_rec(depth + 1, used | vmask[i], i, c & adjdis[i])) return true;
      return false;
    });
  }

  bool has_k5() const {
    Row all;
    for (int i = 0; i < count(); ++i) all.set(i);
    return has_k5_rec(0, 0, -1, all);
  }

  // Sides {a1,a2,a3}, {b1,b2,b3}: all six disjoint, every a adjacent to every b.
  bool has_k33() const {
    int cnt = count();
    for (int a1 = 0; a1 < cnt; ++a1) {
      Row a_next = dis[a1].above(a1);
      bool found = a_next.for_each([&](int a2) {
        Row a_last = (a_next & dis[a2]).above(a2);
        return a_last.for_each([&](int a3) {
          Row bc = (adjdis[a1] & adjdis[a2] & adjdis[a3]).above(a1);
          return bc.for_each([&](int b1) {
            Row bc2 = (bc & dis[b1]).above(b1);
            return bc2.for_each([&](int b2) {
              Row bc3 = (bc2 & dis[b2]).above(b2);
              return bc3.for_each([&](int) { return true; });
            });
          });
        });
      });
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

bool is_planar_oracle(const Graph& g) {
  if (g.n() > 9)
    throw std::invalid_argument("is_planar_oracle supports at most 9 vertices");
  int n = g.n(), m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;  // more edges than any planar graph
  if (m <= 8) return true;  // a K5 minor needs 10 edges, a K3,3 minor needs 9
  MinorCtx ctx(g);
  return !ctx.has_k5() && !ctx.has_k33();
}

}  // namespace pturan

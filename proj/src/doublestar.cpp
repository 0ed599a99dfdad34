#include "pturan/doublestar.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace pturan {

DoubleStarPattern DoubleStarPattern::parse(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 >= text.size())
    throw std::invalid_argument("pattern must look like \"M,K\"");
  auto parse_arm = [](const std::string& s) {
    if (s.empty() || s.size() > 4) throw std::invalid_argument("bad pattern arm: " + s);
    for (char c : s)
      if (c < '0' || c > '9') throw std::invalid_argument("bad pattern arm: " + s);
    return std::stoi(s);
  };
  return DoubleStarPattern(parse_arm(text.substr(0, comma)), parse_arm(text.substr(comma + 1)));
}

std::string DoubleStarWitness::to_string() const {
  std::string s = "backbone=" + std::to_string(x) + "-" + std::to_string(y) + " x-leaves=";
  auto join = [](const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out;
  };
  s += join(leaves_x);
  s += " y-leaves=" + join(leaves_y);
  return s;
}

template <int W>
bool DoubleStarWitness::validate(const BasicGraph<W>& g, const DoubleStarPattern& p) const {
  if (x < 0 || y < 0 || x >= g.n() || y >= g.n() || x == y) return false;
  if (!g.has_edge(x, y)) return false;
  bool ok_sizes = (static_cast<int>(leaves_x.size()) == p.m() &&
                   static_cast<int>(leaves_y.size()) == p.k()) ||
                  (static_cast<int>(leaves_x.size()) == p.k() &&
                   static_cast<int>(leaves_y.size()) == p.m());
  if (!ok_sizes) return false;
  VertexSet<W> seen;
  seen.set(x);
  seen.set(y);
  for (int l : leaves_x) {
    if (l < 0 || l >= g.n() || seen.test(l) || !g.has_edge(x, l)) return false;
    seen.set(l);
  }
  for (int l : leaves_y) {
    if (l < 0 || l >= g.n() || seen.test(l) || !g.has_edge(y, l)) return false;
    seen.set(l);
  }
  return seen.count() == p.vertex_count();
}

namespace {

// Build the leaf selection for a feasible oriented backbone: private
// neighborhoods first, shared pool last, lowest index first everywhere.
template <int W>
DoubleStarWitness build_witness(const BasicGraph<W>& g, int x, int y, int a, int b) {
  auto A = g.neighbors(x);
  A.reset(y);
  auto B = g.neighbors(y);
  B.reset(x);
  auto shared = A & B;
  auto a_priv = A - shared;
  auto b_priv = B - shared;

  DoubleStarWitness w;
  w.x = x;
  w.y = y;
  auto take = [](VertexSet<W>& pool, int want, std::vector<int>& out) {
    for (int v = pool.lowest(); v >= 0 && want > 0; v = pool.next_above(v), --want)
      out.push_back(v);
  };
  int from_a_priv = std::min(a, a_priv.count());
  take(a_priv, from_a_priv, w.leaves_x);
  int from_b_priv = std::min(b, b_priv.count());
  take(b_priv, from_b_priv, w.leaves_y);
  // Shared pool: x's remainder takes the lowest shared vertices, then y's.
  int need_x = a - from_a_priv;
  int v = shared.lowest();
  for (; v >= 0 && need_x > 0; v = shared.next_above(v), --need_x) w.leaves_x.push_back(v);
  for (int need_y = b - from_b_priv; v >= 0 && need_y > 0; v = shared.next_above(v), --need_y)
    w.leaves_y.push_back(v);
  return w;
}

}  // namespace

template <int W>
std::optional<DoubleStarWitness> contains_double_star(const BasicGraph<W>& g,
                                                      const DoubleStarPattern& p) {
  if (g.n() < p.vertex_count()) return std::nullopt;
  for (int x = 0; x < g.n(); ++x) {
    auto nx = g.neighbors(x);
    for (int y = nx.lowest(); y >= 0; y = nx.next_above(y)) {
      if (y < x) continue;  // each edge once, lexicographic
      for (auto [a, b] : {std::pair{p.m(), p.k()}, std::pair{p.k(), p.m()}}) {
        if (backbone_feasible(g, x, y, a, b)) {
          DoubleStarWitness w = build_witness(g, x, y, a, b);
          if (a != p.m()) {  // swapped orientation: normalize so x carries m leaves
            std::swap(w.x, w.y);
            std::swap(w.leaves_x, w.leaves_y);
          }
          if (!w.validate(g, p))
            throw std::logic_error("internal error: constructed witness failed validation");
          return w;
        }
        if (p.m() == p.k()) break;  // both orientations identical
      }
    }
  }
  return std::nullopt;
}

template <int W>
bool stays_free_after_adding(const BasicGraph<W>& g_plus, const DoubleStarPattern& p, int u,
                             int v) {
  if (g_plus.n() < p.vertex_count()) return true;
  auto feasible_either_way = [&](int x, int y) {
    return backbone_feasible(g_plus, x, y, p.m(), p.k()) ||
           (p.m() != p.k() && backbone_feasible(g_plus, x, y, p.k(), p.m()));
  };
  for (int e : {u, v}) {
    auto nb = g_plus.neighbors(e);
    for (int w = nb.lowest(); w >= 0; w = nb.next_above(w))
      if (feasible_either_way(e, w)) return false;
  }
  return true;
}

bool contains_oracle(const Graph& g, const DoubleStarPattern& p) {
  if (g.n() > 16)
    throw std::invalid_argument("contains_oracle is an exhaustive reference, n <= 16 only");
  if (g.n() < p.vertex_count()) return false;
  int n = g.n();
  // For each ordered backbone (x carries m leaves, y carries k): enumerate
  // m-subsets of N(x)\{y} directly, then k-subsets of what remains for y.
  std::vector<int> pool_x, pool_y;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !g.has_edge(x, y)) continue;
      pool_x.clear();
      g.neighbors(x).for_each([&](int w) {
        if (w != y) pool_x.push_back(w);
      });
      if (static_cast<int>(pool_x.size()) < p.m()) continue;
      int px = static_cast<int>(pool_x.size());
      // all m-subsets of pool_x via bitmask
      for (std::uint32_t sx = 0; sx < (1u << px); ++sx) {
        if (std::popcount(sx) != p.m()) continue;
        Mask64 taken;
        taken.set(x);
        taken.set(y);
        for (int i = 0; i < px; ++i)
          if ((sx >> i) & 1) taken.set(pool_x[i]);
        pool_y.clear();
        g.neighbors(y).for_each([&](int w) {
          if (!taken.test(w)) pool_y.push_back(w);
        });
        if (static_cast<int>(pool_y.size()) >= p.k()) return true;
      }
    }
  return false;
}

template bool DoubleStarWitness::validate<1>(const BasicGraph<1>&,
                                             const DoubleStarPattern&) const;
template bool DoubleStarWitness::validate<4>(const BasicGraph<4>&,
                                             const DoubleStarPattern&) const;
template std::optional<DoubleStarWitness> contains_double_star<1>(const BasicGraph<1>&,
                                                                  const DoubleStarPattern&);
template std::optional<DoubleStarWitness> contains_double_star<4>(const BasicGraph<4>&,
                                                                  const DoubleStarPattern&);
template bool stays_free_after_adding<1>(const BasicGraph<1>&, const DoubleStarPattern&, int,
                                         int);
template bool stays_free_after_adding<4>(const BasicGraph<4>&, const DoubleStarPattern&, int,
                                         int);

}  // namespace pturan

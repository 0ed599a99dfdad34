#include "pturan/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pturan {
namespace {

// Cells are explicit vertex lists; contents matter as sets, the stored order
// only fixes deterministic iteration. Kept simple: graphs here are small.
using Cells = std::vector<std::vector<int>>;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.n()) {}

  CanonicalResult run() {
    Cells root(1);
    root[0].resize(n_);
    std::iota(root[0].begin(), root[0].end(), 0);
    std::vector<int> prefix;
    dfs(std::move(root), prefix);

    CanonicalForm form{best_cert_};
    CanonicalResult res{form, graph_from_canonical(form), std::move(gens_), leaves_};
    return res;
  }

 private:
  // Split every cell by neighbor counts into every other cell until the
  // partition is equitable. Restarting the scan after each split keeps the
  // procedure obviously sound and isomorphism-invariant.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
        Mask64 splitter;
        for (int v : cells[si]) splitter.set(v);
        for (std::size_t di = 0; di < cells.size(); ++di) {
          auto& d = cells[di];
          if (d.size() <= 1) continue;
          int c0 = (g_.neighbors(d[0]) & splitter).count();
          bool uniform = true;
          for (int v : d)
            if ((g_.neighbors(v) & splitter).count() != c0) {
              uniform = false;
              break;
            }
          if (uniform) continue;
          // Stable sort by count ascending, then splice groups in place of d.
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(d.size());
          for (int v : d) keyed.emplace_back((g_.neighbors(v) & splitter).count(), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          Cells groups;
          int prev = -1;
          for (auto& [c, v] : keyed) {
            if (groups.empty() || c != prev) groups.emplace_back();
            groups.back().push_back(v);
            prev = c;
          }
          cells.erase(cells.begin() + di);
          cells.insert(cells.begin() + di, groups.begin(), groups.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::string make_cert(const std::vector<int>& lab) const {
    std::string cert;
    cert.push_back(static_cast<char>(n_));
    cert.resize(1 + (static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 7) / 8, '\0');
    std::size_t bit = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++bit)
        if (g_.has_edge(lab[i], lab[j])) cert[1 + bit / 8] |= static_cast<char>(0x80u >> (bit % 8));
    return cert;
  }

  void record_automorphism(const std::vector<int>& lab_a, const std::vector<int>& lab_b) {
    Permutation gamma(n_);
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      gamma[lab_a[i]] = static_cast<std::uint8_t>(lab_b[i]);
      if (lab_a[i] != lab_b[i]) identity = false;
    }
    if (identity) return;
    // Equal leaf certificates mathematically force an automorphism; verify
    // anyway so a canonizer bug can never poison orbit pruning.
    for (int v = 0; v < n_; ++v) {
      Mask64 mapped;
      g_.neighbors(v).for_each([&](int w) { mapped.set(gamma[w]); });
      if (!(mapped == g_.neighbors(gamma[v])))
        throw std::logic_error("certificate collision produced a non-automorphism");
    }
    for (const auto& existing : gens_)
      if (existing == gamma) return;
    gens_.push_back(std::move(gamma));
    ++gen_version_;
  }

  void dfs(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    bool discrete = true;
    for (const auto& c : cells)
      if (c.size() > 1) {
        discrete = false;
        break;
      }
    if (discrete) {
      ++leaves_;
      std::vector<int> lab(n_);
      for (int i = 0; i < n_; ++i) lab[i] = cells[i][0];
      std::string cert = make_cert(lab);
      if (first_cert_.empty()) {
        first_cert_ = cert;
        first_lab_ = lab;
      } else if (cert == first_cert_) {
        record_automorphism(first_lab_, lab);
      }
      if (best_cert_.empty() || cert > best_cert_) {
        best_cert_ = cert;
        best_lab_ = lab;
      } else if (cert == best_cert_) {
        record_automorphism(best_lab_, lab);
      }
      return;
    }

    // Target: first smallest non-singleton cell (isomorphism-invariant).
    std::size_t target = 0;
    std::size_t best_size = static_cast<std::size_t>(n_) + 1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && cells[i].size() < best_size) {
        best_size = cells[i].size();
        target = i;
      }
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> tried;
    UnionFind uf(n_);
    std::uint64_t built_version = ~0ULL;
    for (int v : candidates) {
      if (built_version != gen_version_) {
        uf = UnionFind(n_);
        for (const auto& gen : gens_) {
          bool fixes_prefix = true;
          for (int p : prefix)
            if (gen[p] != p) {
              fixes_prefix = false;
              break;
            }
          if (fixes_prefix)
            for (int x = 0; x < n_; ++x) uf.unite(x, gen[x]);
        }
        built_version = gen_version_;
      }
      bool redundant = false;
      for (int t : tried)
        if (uf.find(t) == uf.find(v)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(v);

      Cells child = cells;
      std::vector<int> rest;
      rest.reserve(cells[target].size() - 1);
      for (int w : cells[target])
        if (w != v) rest.push_back(w);
      child[target] = {v};
      child.insert(child.begin() + target + 1, std::move(rest));
      prefix.push_back(v);
      dfs(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  std::string first_cert_, best_cert_;
  std::vector<int> first_lab_, best_lab_;
  std::vector<Permutation> gens_;
  std::uint64_t gen_version_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

CanonicalResult canonicalize(const Graph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

Graph graph_from_canonical(const CanonicalForm& form) {
  if (form.bytes.empty()) throw std::invalid_argument("empty canonical form");
  int n = form.n();
  std::size_t expect = 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8;
  if (n < 1 || form.bytes.size() != expect)
    throw std::invalid_argument("malformed canonical form");
  Graph g(n);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (static_cast<unsigned char>(form.bytes[1 + bit / 8]) & (0x80u >> (bit % 8)))
        g = g.with_edge(i, j);
  return g;
}

std::vector<int> vertex_orbits(int n, const std::vector<Permutation>& gens) {
  UnionFind uf(n);
  for (const auto& gen : gens)
    for (int v = 0; v < n; ++v) uf.unite(v, static_cast<int>(gen[v]));
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = uf.find(v);
  return orbit;
}

}  // namespace pturan

#include "pturan/cache.hpp"

#include <fstream>
#include <sstream>

#include "pturan/graph6.hpp"
#include "pturan/planarity.hpp"

namespace pturan {

std::vector<CacheEntry> load_cache(const std::string& path) {
  std::vector<CacheEntry> entries;
  std::ifstream in(path);
  if (!in) return entries;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    CacheEntry e;
    std::string exact_tok;
    if (!(ss >> e.n >> e.m >> e.k >> e.value >> exact_tok >> e.witness_g6 >> e.version))
      continue;
    if (exact_tok != "0" && exact_tok != "1") continue;
    e.exact = exact_tok == "1";
    entries.push_back(std::move(e));
  }
  return entries;
}

void append_cache(const std::string& path, const CacheEntry& entry) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file for append: " + path);
  out << entry.n << ' ' << entry.m << ' ' << entry.k << ' ' << entry.value << ' '
      << (entry.exact ? 1 : 0) << ' ' << entry.witness_g6 << ' ' << entry.version << '\n';
}

std::optional<CacheEntry> cache_lookup(const std::string& path, int n,
                                       const DoubleStarPattern& p) {
  auto entries = load_cache(path);
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->n != n || it->m != p.m() || it->k != p.k()) continue;
    if (it->version != kEngineVersion) continue;  // stale engine: recompute
    try {
      Graph w = from_graph6(it->witness_g6);
      if (w.n() != n) continue;
      if (w.edge_count() != it->value) continue;
      if (!is_planar(w)) continue;
      if (!is_free(w, p)) continue;
    } catch (const Graph6Error&) {
      continue;
    }
    return *it;
  }
  return std::nullopt;
}

}  // namespace pturan

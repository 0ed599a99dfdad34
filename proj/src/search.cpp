#include "pturan/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "pturan/canonical.hpp"
#include "pturan/planarity.hpp"

namespace pturan {
namespace {

int planar_edge_ceiling(int n) { return n < 3 ? n * (n - 1) / 2 : 3 * n - 6; }

struct SharedSearch {
  std::mutex mu;
  std::condition_variable cv;
  std::deque<std::string> queue;
  std::unordered_set<std::string> visited;
  int active = 0;
  bool truncated = false;  // budget refused pending work

  // running optimum (updated once per newly visited class)
  int best = -1;
  std::uint64_t best_count = 0;
  std::set<std::string> best_certs;
  std::uint64_t expanded = 0;

  const SearchConfig* cfg = nullptr;
  int edge_cap = 0;
  bool value_done = false;  // value-only mode reached the planar ceiling

  void record_class(const std::string& cert, int edge_count) {
    if (edge_count > best) {
      best = edge_count;
      best_count = 1;
      best_certs.clear();
      if (cfg->collect_extremal) best_certs.insert(cert);
      if (!cfg->collect_extremal && best == edge_cap) value_done = true;
    } else if (edge_count == best) {
      ++best_count;
      if (cfg->collect_extremal) {
        best_certs.insert(cert);
        if (static_cast<int>(best_certs.size()) > cfg->extremal_cap)
          best_certs.erase(std::prev(best_certs.end()));
      }
    }
  }
};

void search_worker(SharedSearch& sh, const DoubleStarPattern& p) {
  std::unique_lock lk(sh.mu);
  while (true) {
    sh.cv.wait(lk, [&] { return !sh.queue.empty() || sh.active == 0 || sh.value_done; });
    if (sh.queue.empty() || sh.value_done) {
      if (sh.active == 0 || sh.value_done) return;
      continue;
    }
    if (sh.cfg->node_budget != 0 && sh.expanded >= sh.cfg->node_budget) {
      sh.truncated = true;
      sh.queue.clear();
      sh.cv.notify_all();
      if (sh.active == 0) return;
      continue;
    }
    std::string cert = std::move(sh.queue.front());
    sh.queue.pop_front();
    ++sh.expanded;
    ++sh.active;
    lk.unlock();

    CanonicalForm form{std::move(cert)};
    Graph g = graph_from_canonical(form);
    int n = g.n();
    int e = g.edge_count();
    std::vector<std::pair<int, std::string>> found;  // (edge count, child cert)
    if (e < planar_edge_ceiling(n)) {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph child = g.with_edge(u, v);
          if (!stays_free_after_adding(child, p, u, v)) continue;
          if (!is_planar(child)) continue;
          found.emplace_back(e + 1, canonical_form(child).bytes);
        }
    }

    lk.lock();
    for (auto& [ce, cc] : found)
      if (sh.visited.insert(cc).second) {
        sh.record_class(cc, ce);
        sh.queue.push_back(std::move(cc));
      }
    --sh.active;
    sh.cv.notify_all();
  }
}

}  // namespace

ExactResult exact_planar_turan(int n, const DoubleStarPattern& p, const SearchConfig& cfg) {
  if (n < 1 || n > 62)
    throw std::invalid_argument("exact_planar_turan supports 1 <= n <= 62");
  auto t0 = std::chrono::steady_clock::now();

  SharedSearch sh;
  SearchConfig local = cfg;
  if (local.worker_count < 1) local.worker_count = 1;
  if (local.extremal_cap < 1) local.extremal_cap = 1;
  sh.cfg = &local;
  sh.edge_cap = planar_edge_ceiling(n);

  std::string root = canonical_form(Graph(n)).bytes;
  sh.visited.insert(root);
  sh.record_class(root, 0);
  sh.queue.push_back(std::move(root));

  std::vector<std::thread> pool;
  pool.reserve(local.worker_count);
  for (int i = 0; i < local.worker_count; ++i)
    pool.emplace_back(search_worker, std::ref(sh), std::cref(p));
  for (auto& t : pool) t.join();

  ExactResult res{n, p};
  res.value = sh.best;
  res.exact = !sh.truncated;
  res.extremal_class_count = sh.best_count;
  res.classes_visited = sh.visited.size();
  res.nodes_expanded = sh.expanded;
  if (local.collect_extremal) {
    for (const auto& cert : sh.best_certs) {
      Graph g = graph_from_canonical(CanonicalForm{cert});
      if (g.edge_count() != res.value || !is_planar(g) || !is_free(g, p))
        throw std::logic_error("extremal witness failed re-verification");
      res.extremal.push_back(std::move(g));
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

int naive_exact(int n, const DoubleStarPattern& p) {
  if (n < 1 || n > 6) throw std::invalid_argument("naive_exact supports 1 <= n <= 6");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    int e = std::popcount(mask);
    if (e <= best) continue;
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1) g = g.with_edge(slots[i].first, slots[i].second);
    if (contains_oracle(g, p)) continue;
    if (!is_planar_oracle(g)) continue;
    best = e;
  }
  return best;
}

void for_each_class(int n, const std::function<bool(const Graph&)>& keep,
                    const std::function<void(const Graph&)>& visit) {
  Graph empty(n);
  if (!keep(empty)) return;
  std::unordered_set<std::string> visited;
  std::deque<std::string> queue;
  std::string root = canonical_form(empty).bytes;
  visited.insert(root);
  visit(empty);
  queue.push_back(std::move(root));
  while (!queue.empty()) {
    Graph g = graph_from_canonical(CanonicalForm{queue.front()});
    queue.pop_front();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        Graph child = g.with_edge(u, v);
        if (!keep(child)) continue;
        std::string cert = canonical_form(child).bytes;
        if (visited.insert(cert).second) {
          visit(child);
          queue.push_back(std::move(cert));
        }
      }
  }
}

namespace {

bool triangle_is_face(const Graph& g, int a, int b, int c) {
  int n = g.n();
  if (n <= 4) return true;
  Mask64 rest = Mask64::first_n(n);
  rest.reset(a);
  rest.reset(b);
  rest.reset(c);
  Mask64 reach = Mask64::single(rest.lowest());
  while (true) {
    Mask64 grown = reach;
    reach.for_each([&](int v) { grown |= g.neighbors(v); });
    grown &= rest;
    if (grown == reach) break;
    reach = grown;
  }
  return reach == rest;
}

Graph stacked_triangulation(int n) {
  Graph g(4);
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g = g.with_edge(u, v);
  for (int v = 4; v < n; ++v) {
    auto [a, b, c] = faces.front();
    faces.erase(faces.begin());
    Graph grown(v + 1);
    for (auto [x, y] : g.edges()) grown = grown.with_edge(x, y);
    g = grown.with_edge(v, a).with_edge(v, b).with_edge(v, c);
    faces.push_back({a, b, v});
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return g;
}

}  // namespace

std::vector<Graph> enumerate_maximal_planar(int n) {
  if (n < 3 || n > 10)
    throw std::invalid_argument("enumerate_maximal_planar supports 3 <= n <= 10");
  if (n == 3) return {Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}})};

  std::set<std::string> visited;  // ordered: deterministic output
  std::deque<std::string> queue;
  std::string seed = canonical_form(stacked_triangulation(n)).bytes;
  visited.insert(seed);
  queue.push_back(std::move(seed));
  while (!queue.empty()) {
    Graph g = graph_from_canonical(CanonicalForm{queue.front()});
    queue.pop_front();
    for (auto [u, v] : g.edges()) {
      // the two triangular faces along uv
      int x = -1, y = -1;
      auto common = g.neighbors(u) & g.neighbors(v);
      for (int w = common.lowest(); w >= 0; w = common.next_above(w)) {
        if (!triangle_is_face(g, u, v, w)) continue;
        if (x < 0)
          x = w;
        else if (y < 0)
          y = w;
        else
          throw std::logic_error("edge of a triangulation borders more than two faces");
      }
      if (x < 0 || y < 0)
        throw std::logic_error("edge of a triangulation borders fewer than two faces");
      if (g.has_edge(x, y)) continue;
      Graph flipped = g.without_edge(u, v).with_edge(x, y);
      std::string cert = canonical_form(flipped).bytes;
      if (visited.insert(cert).second) queue.push_back(std::move(cert));
    }
  }

  std::vector<Graph> out;
  out.reserve(visited.size());
  for (const auto& cert : visited) {
    Graph g = graph_from_canonical(CanonicalForm{cert});
    if (g.edge_count() != 3 * n - 6 || !is_planar(g))
      throw std::logic_error("flip enumeration produced a non-triangulation");
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pturan

// Command-line front end: exact values, certified constructions, graph-stream
// verification, bounds tables, and structural predicate suites.
//
// Exit codes: 0 success / all consistent; 1 a violation or containment was
// found (verify, lemmas, bounds); 2 usage or input error.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pturan/bounds.hpp"
#include "pturan/cache.hpp"
#include "pturan/constructions.hpp"
#include "pturan/doublestar.hpp"
#include "pturan/graph6.hpp"
#include "pturan/planarity.hpp"
#include "pturan/search.hpp"

namespace {

using namespace pturan;

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Parse "M,K", announcing canonicalization on stdout when the user wrote the
// larger arm first.
DoubleStarPattern parse_pattern_flag(const std::string& text) {
  DoubleStarPattern p = DoubleStarPattern::parse(text);
  std::string canonical = p.to_string();
  if (text != canonical) {
    std::string trimmed = text;
    // Only announce a genuine swap (e.g. "4,2" -> "2,4"), not cosmetic spaces.
    if (trimmed != canonical)
      std::cout << "pattern canonicalized to " << canonical << "\n";
  }
  return p;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

int run_exact(int n, const std::string& pattern_text, int threads, std::uint64_t budget,
              const std::string& cache_path) {
  DoubleStarPattern p = parse_pattern_flag(pattern_text);

  if (!cache_path.empty()) {
    if (auto hit = cache_lookup(cache_path, n, p)) {
      std::cout << "value=" << hit->value << " exact=" << bool_word(hit->exact) << "\n";
      std::cout << "witness " << hit->witness_g6 << "\n";
      std::cerr << "cache hit (witness re-verified)\n";
      return 0;
    }
  }

  SearchConfig cfg;
  cfg.worker_count = threads;
  cfg.node_budget = budget;
  ExactResult r = exact_planar_turan(n, p, cfg);
  std::cout << "value=" << r.value << " exact=" << bool_word(r.exact) << "\n";
  std::cout << "classes=" << r.extremal_class_count << "\n";
  for (const auto& g : r.extremal) std::cout << "witness " << to_graph6(g) << "\n";
  std::cerr << "classes_visited=" << r.classes_visited << " nodes_expanded=" << r.nodes_expanded
            << " seconds=" << r.seconds << "\n";

  if (!cache_path.empty() && !r.extremal.empty()) {
    CacheEntry e{n, p.m(), p.k(), r.value, r.exact, to_graph6(r.extremal.front()),
                 kEngineVersion};
    append_cache(cache_path, e);
  }
  return 0;
}

int run_construct(const std::string& family, int n, int copies) {
  std::optional<ConstructionReport> rep;
  if (family == "k2star")
    rep = k2_star(n);
  else if (family == "double-wheel")
    rep = matched_double_wheel(n);
  else if (family == "tri7")
    rep = seven_vertex_triangulation();
  else if (family == "icosa")
    rep = icosahedron();
  else if (family == "s35")
    rep = s35_layered(n);
  else {
    std::cerr << "unknown family: " << family
              << " (expected k2star, double-wheel, tri7, icosa, s35)\n";
    return 2;
  }

  if (copies > 1) {
    Graph base = shrink(rep->graph);
    Graph combined = disjoint_copies(base, copies);
    bool planar = is_planar(combined);
    bool free_ok = is_free(combined, rep->free_of);
    std::cout << "family=" << rep->family << " x" << copies << " n=" << combined.n() << "\n";
    if (combined.n() <= 62) std::cout << to_graph6(combined) << "\n";
    std::cout << "edges=" << combined.edge_count() << " planar=" << bool_word(planar)
              << " free(" << rep->free_of.to_string() << ")=" << bool_word(free_ok) << "\n";
    return planar && free_ok ? 0 : 1;
  }

  std::cout << "family=" << rep->family << " n=" << rep->graph.n() << "\n";
  if (rep->graph.n() <= 62) std::cout << to_graph6(shrink(rep->graph)) << "\n";
  std::cout << "edges=" << rep->graph.edge_count() << " planar=" << bool_word(rep->verified_planar)
            << " free(" << rep->free_of.to_string() << ")=" << bool_word(rep->verified_free)
            << "\n";
  if (!rep->notes.empty()) std::cout << "notes: " << rep->notes << "\n";
  return 0;
}

int run_verify(const std::string& pattern_text, bool require_planar) {
  DoubleStarPattern p = parse_pattern_flag(pattern_text);
  std::string line;
  long line_no = 0;
  bool any_hit = false, any_error = false;
  while (std::getline(std::cin, line)) {
    ++line_no;
    std::string_view body = strip_graph6_header(line);
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.remove_suffix(1);
    if (body.empty()) continue;
    try {
      Graph g = from_graph6(body);
      if (require_planar && !is_planar(g)) {
        std::cout << "NONPLANAR\n";
        any_hit = true;
        continue;
      }
      if (auto w = contains_double_star(g, p)) {
        std::cout << "CONTAINS " << w->to_string() << "\n";
        any_hit = true;
      } else {
        std::cout << "FREE\n";
      }
    } catch (const Graph6Error& e) {
      std::cout << "ERROR line " << line_no << ": " << e.what() << "\n";
      any_error = true;
    }
  }
  if (any_error) return 2;
  return any_hit ? 1 : 0;
}

int run_bounds(const std::string& pattern_text, const std::string& range, int exact_upto,
               int threads, bool records, const std::string& cache_path) {
  DoubleStarPattern p = parse_pattern_flag(pattern_text);
  auto dots = range.find("..");
  if (dots == std::string::npos) {
    std::cerr << "range must look like A..B\n";
    return 2;
  }
  long long a, b;
  try {
    a = std::stoll(range.substr(0, dots));
    b = std::stoll(range.substr(dots + 2));
  } catch (const std::exception&) {
    std::cerr << "range must look like A..B with integers\n";
    return 2;
  }
  if (a < 1 || b < a) {
    std::cerr << "need 1 <= A <= B\n";
    return 2;
  }

  auto field = [](std::optional<long long> v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  bool all_consistent = true;
  if (!records)
    std::cout << "n\tpattern\texact\tlower\tupper\tconjecture\tconsistent\n";
  for (long long n = a; n <= b; ++n) {
    std::optional<long long> exact;
    if (n <= exact_upto) {
      if (!cache_path.empty()) {
        if (auto hit = cache_lookup(cache_path, static_cast<int>(n), p); hit && hit->exact)
          exact = hit->value;
      }
      if (!exact) {
        SearchConfig cfg;
        cfg.worker_count = threads;
        cfg.collect_extremal = true;
        ExactResult r = exact_planar_turan(static_cast<int>(n), p, cfg);
        if (r.exact) exact = r.value;
        if (!cache_path.empty() && !r.extremal.empty())
          append_cache(cache_path, CacheEntry{static_cast<int>(n), p.m(), p.k(), r.value,
                                              r.exact, to_graph6(r.extremal.front()),
                                              kEngineVersion});
      }
    }
    BoundReport rep = check_consistency(p, n, exact);
    all_consistent = all_consistent && rep.consistent;
    std::optional<long long> conj;
    if (rep.conjecture) conj = rep.conjecture->value;
    if (records) {
      std::cout << "n=" << n << " pattern=" << p.to_string() << " exact=" << field(rep.exact)
                << " lower=" << field(rep.theorem.valid ? rep.theorem.lower : std::nullopt)
                << " upper=" << field(rep.theorem.valid ? rep.theorem.upper : std::nullopt)
                << " conjecture=" << field(conj)
                << " consistent=" << bool_word(rep.consistent) << "\n";
    } else {
      std::cout << n << '\t' << p.to_string() << '\t' << field(rep.exact) << '\t'
                << field(rep.theorem.valid ? rep.theorem.lower : std::nullopt) << '\t'
                << field(rep.theorem.valid ? rep.theorem.upper : std::nullopt) << '\t'
                << field(conj) << '\t' << (rep.consistent ? "yes" : "NO") << "\n";
    }
  }
  return all_consistent ? 0 : 1;
}

int run_lemmas(const std::string& suite, int samples, std::uint64_t seed, int threads) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = lemma_suite_labels();
  else
    suites.push_back(suite);

  LemmaSuiteOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  opt.worker_count = threads;
  bool all_pass = true;
  for (const auto& s : suites) {
    std::vector<LemmaResult> results;
    try {
      results = lemma_suite(s, opt);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << " [" << s << "] " << r.name;
      if (!r.detail.empty()) std::cout << " | " << r.detail;
      if (r.counterexample) std::cout << " | counterexample " << *r.counterexample;
      std::cout << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar Turán engine for double stars"};
  app.require_subcommand(1);

  // exact
  auto* exact = app.add_subcommand("exact", "compute ex_P(n, S(m,k)) exactly");
  int ex_n = 0;
  std::string ex_pattern;
  int ex_threads = default_threads();
  std::uint64_t ex_budget = 0;
  std::string ex_cache;
  exact->add_option("--n", ex_n, "vertex count")->required();
  exact->add_option("--pattern", ex_pattern, "double star as M,K")->required();
  exact->add_option("--threads", ex_threads, "worker threads (1 = fully deterministic order)");
  exact->add_option("--budget", ex_budget, "max classes expanded (0 = unlimited)");
  exact->add_option("--cache", ex_cache, "append-only result cache file");

  // construct
  auto* construct = app.add_subcommand("construct", "build and certify a construction");
  std::string c_family;
  int c_n = 0, c_copies = 1;
  construct->add_option("--family", c_family, "k2star | double-wheel | tri7 | icosa | s35")
      ->required();
  construct->add_option("--n", c_n, "vertex count (parameterized families)");
  construct->add_option("--copies", c_copies, "disjoint copies of the base graph");

  // verify
  auto* verify = app.add_subcommand("verify", "verify graph6 lines from standard input");
  std::string v_pattern;
  bool v_require_planar = false;
  verify->add_option("--pattern", v_pattern, "double star as M,K")->required();
  verify->add_flag("--require-planar", v_require_planar, "also reject nonplanar graphs");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas over a range");
  std::string b_pattern, b_range, b_cache;
  int b_exact_upto = 0, b_threads = default_threads();
  bool b_records = false;
  bounds->add_option("--pattern", b_pattern, "double star as M,K")->required();
  bounds->add_option("--range", b_range, "vertex range A..B")->required();
  bounds->add_option("--exact-upto", b_exact_upto, "compute exact values for n up to this");
  bounds->add_option("--threads", b_threads, "worker threads for exact computations");
  bounds->add_option("--cache", b_cache, "append-only result cache file");
  bounds->add_flag("--records", b_records, "machine-readable records instead of a table");

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "run a structural predicate suite");
  std::string l_suite;
  int l_samples = 1000, l_threads = default_threads();
  std::uint64_t l_seed = 20260816;
  lemmas->add_option("--suite", l_suite, "suite label or 'all'")->required();
  lemmas->add_option("--samples", l_samples, "randomized samples per suite");
  lemmas->add_option("--seed", l_seed, "base RNG seed");
  lemmas->add_option("--threads", l_threads, "worker threads for exact computations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2
  }

  try {
    if (exact->parsed()) return run_exact(ex_n, ex_pattern, ex_threads, ex_budget, ex_cache);
    if (construct->parsed()) return run_construct(c_family, c_n, c_copies);
    if (verify->parsed()) return run_verify(v_pattern, v_require_planar);
    if (bounds->parsed())
      return run_bounds(b_pattern, b_range, b_exact_upto, b_threads, b_records, b_cache);
    if (lemmas->parsed()) return run_lemmas(l_suite, l_samples, l_seed, l_threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

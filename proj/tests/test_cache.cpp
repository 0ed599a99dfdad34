#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "pturan/cache.hpp"
#include "pturan/doublestar.hpp"
#include "pturan/graph6.hpp"

using namespace pturan;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() / name).string()) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("missing cache file reads as empty") {
  TempFile f("pturan_cache_missing.txt");
  CHECK(load_cache(f.path).empty());
  CHECK_FALSE(cache_lookup(f.path, 5, DoubleStarPattern(2, 2)).has_value());
}

TEST_CASE("append then lookup round trip") {
  TempFile f("pturan_cache_rt.txt");
  // The triangle is a genuine witness for ex_P(3, S(2,2)) = 3: the pattern
  // does not fit in 3 vertices, so the planar maximum wins.
  CacheEntry e{3, 2, 2, 3, true, "Bw", kEngineVersion};
  append_cache(f.path, e);
  auto hit = cache_lookup(f.path, 3, DoubleStarPattern(2, 2));
  REQUIRE(hit);
  CHECK(hit->value == 3);
  CHECK(hit->exact);
  CHECK(hit->witness_g6 == "Bw");

  CHECK_FALSE(cache_lookup(f.path, 4, DoubleStarPattern(2, 2)).has_value());
  CHECK_FALSE(cache_lookup(f.path, 3, DoubleStarPattern(2, 3)).has_value());
}

TEST_CASE("newest entry wins") {
  TempFile f("pturan_cache_newest.txt");
  append_cache(f.path, {3, 2, 2, 2, false, "BW", kEngineVersion});  // path, value 2
  append_cache(f.path, {3, 2, 2, 3, true, "Bw", kEngineVersion});   // triangle, value 3
  auto hit = cache_lookup(f.path, 3, DoubleStarPattern(2, 2));
  REQUIRE(hit);
  CHECK(hit->value == 3);
  CHECK(hit->exact);
}

TEST_CASE("version mismatches are ignored") {
  TempFile f("pturan_cache_ver.txt");
  append_cache(f.path, {3, 2, 2, 3, true, "Bw", "someother-9"});
  CHECK_FALSE(cache_lookup(f.path, 3, DoubleStarPattern(2, 2)).has_value());
}

TEST_CASE("witnesses that fail re-verification are rejected") {
  TempFile f("pturan_cache_bad.txt");
  // Wrong edge count for the claimed value.
  append_cache(f.path, {3, 2, 2, 2, true, "Bw", kEngineVersion});
  CHECK_FALSE(cache_lookup(f.path, 3, DoubleStarPattern(2, 2)).has_value());

  // Witness containing the pattern: a (1,1) star pair inside a path of 4.
  TempFile f2("pturan_cache_bad2.txt");
  append_cache(f2.path, {4, 1, 1, 3, true, to_graph6(Graph::from_edge_list(
                                               4, {{0, 1}, {1, 2}, {2, 3}})),
                         kEngineVersion});
  CHECK_FALSE(cache_lookup(f2.path, 4, DoubleStarPattern(1, 1)).has_value());

  // Wrong vertex count.
  TempFile f3("pturan_cache_bad3.txt");
  append_cache(f3.path, {5, 2, 2, 3, true, "Bw", kEngineVersion});
  CHECK_FALSE(cache_lookup(f3.path, 5, DoubleStarPattern(2, 2)).has_value());
}

TEST_CASE("malformed lines are skipped without aborting the scan") {
  TempFile f("pturan_cache_noise.txt");
  {
    std::ofstream out(f.path);
    out << "# comment line\n";
    out << "3 2 2\n";                          // too short
    out << "x y z w q r s\n";                  // non-numeric
    out << "3 2 2 3 maybe Bw pturan-1\n";      // bad exact token
  }
  append_cache(f.path, {3, 2, 2, 3, true, "Bw", kEngineVersion});
  auto hit = cache_lookup(f.path, 3, DoubleStarPattern(2, 2));
  REQUIRE(hit);
  CHECK(hit->value == 3);
  CHECK(load_cache(f.path).size() == 1);
}

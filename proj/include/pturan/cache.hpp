#pragma once
// Append-only result cache: one line per computed value,
// "n m k value exact witness version". Hits are trusted only after the
// witness re-verifies (decodes, has n vertices, is planar, is pattern-free,
// and has exactly `value` edges) and the engine version matches.
#include <optional>
#include <string>
#include <vector>

#include "pturan/doublestar.hpp"

namespace pturan {

inline constexpr const char* kEngineVersion = "pturan-1";

struct CacheEntry {
  int n = 0, m = 0, k = 0;
  long long value = 0;
  bool exact = false;
  std::string witness_g6;
  std::string version;
};

// Missing file -> empty list; malformed lines are skipped.
std::vector<CacheEntry> load_cache(const std::string& path);

void append_cache(const std::string& path, const CacheEntry& entry);

// Newest matching entry whose version matches and whose witness re-verifies.
std::optional<CacheEntry> cache_lookup(const std::string& path, int n,
                                       const DoubleStarPattern& p);

}  // namespace pturan

#pragma once
// graph6 text serialization for graphs on 1..62 vertices (single size byte).
// Format: byte (n + 63), then the upper-triangle bits in column order
// (0,1),(0,2),(1,2),(0,3),... packed into 6-bit groups (big-endian within a
// group, zero-padded), each group emitted as (value + 63).
#include <stdexcept>
#include <string>
#include <string_view>

#include "pturan/graph.hpp"

namespace pturan {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// Remove an optional ">>graph6<<" prefix.
inline std::string_view strip_graph6_header(std::string_view s) {
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header) s.remove_prefix(kGraph6Header.size());
  return s;
}

inline std::string to_graph6(const Graph& g) {
  if (g.n() > 62) throw Graph6Error("graph6 output supports at most 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(g.n() + 63));
  int acc = 0, nbits = 0;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view line) {
  std::string_view s = strip_graph6_header(line);
  if (s.empty()) throw Graph6Error("empty graph6 string");
  for (char c : s)
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character");
  int n = s[0] - 63;
  if (n == 0) throw Graph6Error("graph6 order 0 not supported");
  if (n > 62) throw Graph6Error("graph6 input larger than 62 vertices not supported");
  long bits_needed = static_cast<long>(n) * (n - 1) / 2;
  long groups = (bits_needed + 5) / 6;
  if (static_cast<long>(s.size()) - 1 != groups)
    throw Graph6Error("graph6 string has wrong length for its vertex count");
  Graph g(n);
  long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int group = s[1 + bit / 6] - 63;
      if ((group >> (5 - bit % 6)) & 1) g = g.with_edge(u, v);
    }
  // Padding bits must be zero.
  for (long b = bits_needed; b < groups * 6; ++b) {
    int group = s[1 + b / 6] - 63;
    if ((group >> (5 - b % 6)) & 1) throw Graph6Error("nonzero padding bits in graph6 string");
  }
  return g;
}

}  // namespace pturan

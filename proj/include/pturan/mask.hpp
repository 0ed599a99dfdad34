#pragma once
// Fixed-width bitmask vertex sets. VertexSet<1> covers n <= 64 (the search and
// serialization range); VertexSet<4> covers n <= 256 (large constructions).
#include <array>
#include <bit>
#include <cstdint>
#include <compare>

namespace pturan {

template <int Words>
struct VertexSet {
  static_assert(Words >= 1 && Words <= 8);
  static constexpr int kMaxVertices = 64 * Words;

  std::array<std::uint64_t, Words> w{};

  constexpr VertexSet() = default;

  static constexpr VertexSet single(int i) {
    VertexSet s;
    s.set(i);
    return s;
  }
  // {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    VertexSet s;
    for (int i = 0; i < Words; ++i) {
      int lo = 64 * i;
      if (n >= lo + 64)
        s.w[i] = ~0ULL;
      else if (n > lo)
        s.w[i] = (~0ULL) >> (64 - (n - lo));
    }
    return s;
  }

  constexpr bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
  constexpr void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  constexpr void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }

  constexpr int count() const {
    int c = 0;
    for (int i = 0; i < Words; ++i) c += std::popcount(w[i]);
    return c;
  }
  constexpr bool none() const {
    for (int i = 0; i < Words; ++i)
      if (w[i]) return false;
    return true;
  }
  constexpr bool any() const { return !none(); }

  // Lowest set bit; -1 if empty.
  constexpr int lowest() const {
    for (int i = 0; i < Words; ++i)
      if (w[i]) return 64 * i + std::countr_zero(w[i]);
    return -1;
  }
  // Lowest set bit strictly above i; -1 if none. Enables `for (v = s.lowest(); v >= 0; v = s.next_above(v))`.
  constexpr int next_above(int i) const {
    ++i;
    if (i >= kMaxVertices) return -1;
    int wi = i >> 6;
    std::uint64_t cur = w[wi] & (~0ULL << (i & 63));
    while (true) {
      if (cur) return 64 * wi + std::countr_zero(cur);
      if (++wi >= Words) return -1;
      cur = w[wi];
    }
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int i = 0; i < Words; ++i) {
      std::uint64_t cur = w[i];
      while (cur) {
        f(64 * i + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < Words; ++i) a.w[i] &= b.w[i];
    return a;
  }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < Words; ++i) a.w[i] |= b.w[i];
    return a;
  }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < Words; ++i) a.w[i] ^= b.w[i];
    return a;
  }
  // Set difference a \ b.
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) {
    for (int i = 0; i < Words; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  constexpr VertexSet& operator&=(const VertexSet& b) { return *this = *this & b; }
  constexpr VertexSet& operator|=(const VertexSet& b) { return *this = *this | b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  // Lexicographic by vertex index (word 0 low bits first); used only for deterministic ordering.
  friend constexpr bool operator<(const VertexSet& a, const VertexSet& b) {
    for (int i = Words - 1; i >= 0; --i)
      if (a.w[i] != b.w[i]) return a.w[i] < b.w[i];
    return false;
  }
};

using Mask64 = VertexSet<1>;

}  // namespace pturan

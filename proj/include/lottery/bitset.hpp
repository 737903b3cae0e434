#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace lottery {

// Fixed-width 128-bit vertex set. Vertices are labelled 1..128; vertex v
// occupies bit v-1 (word v-1 >> 6). Wide enough for every design in scope
// (n <= 70) with headroom, and intersection sizes are two popcounts.
struct Block128 {
  std::uint64_t w0 = 0, w1 = 0;

  static Block128 from_vertices(const std::vector<int>& vs) {
    Block128 b;
    for (int v : vs) b.set(v);
    return b;
  }

  void set(int v) {
    if (v <= 64)
      w0 |= std::uint64_t{1} << (v - 1);
    else
      w1 |= std::uint64_t{1} << (v - 65);
  }
  void reset(int v) {
    if (v <= 64)
      w0 &= ~(std::uint64_t{1} << (v - 1));
    else
      w1 &= ~(std::uint64_t{1} << (v - 65));
  }
  bool test(int v) const {
    if (v <= 64) return (w0 >> (v - 1)) & 1;
    return (w1 >> (v - 65)) & 1;
  }

  int count() const { return std::popcount(w0) + std::popcount(w1); }
  bool any() const { return (w0 | w1) != 0; }
  bool none() const { return !any(); }

  friend Block128 operator&(const Block128& a, const Block128& b) {
    return {a.w0 & b.w0, a.w1 & b.w1};
  }
  friend Block128 operator|(const Block128& a, const Block128& b) {
    return {a.w0 | b.w0, a.w1 | b.w1};
  }
  friend Block128 operator^(const Block128& a, const Block128& b) {
    return {a.w0 ^ b.w0, a.w1 ^ b.w1};
  }
  Block128& operator|=(const Block128& o) {
    w0 |= o.w0;
    w1 |= o.w1;
    return *this;
  }
  Block128& operator&=(const Block128& o) {
    w0 &= o.w0;
    w1 &= o.w1;
    return *this;
  }
  bool operator==(const Block128& o) const = default;

  int intersection_size(const Block128& o) const {
    return std::popcount(w0 & o.w0) + std::popcount(w1 & o.w1);
  }
  bool intersects(const Block128& o) const {
    return ((w0 & o.w0) | (w1 & o.w1)) != 0;
  }
  bool subset_of(const Block128& o) const {
    return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0;
  }

  // Smallest member label, or 0 when empty.
  int lowest() const {
    if (w0) return std::countr_zero(w0) + 1;
    if (w1) return std::countr_zero(w1) + 65;
    return 0;
  }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    std::uint64_t a = w0;
    while (a) {
      f(std::countr_zero(a) + 1);
      a &= a - 1;
    }
    a = w1;
    while (a) {
      f(std::countr_zero(a) + 65);
      a &= a - 1;
    }
  }
};

// Lexicographic order on the ascending member lists. For equal-cardinality
// sets this is decided by the lowest differing bit: the set owning it has
// the smaller element at the first difference.
inline bool lex_less(const Block128& a, const Block128& b) {
  std::uint64_t d0 = a.w0 ^ b.w0;
  if (d0) return (a.w0 >> std::countr_zero(d0)) & 1;
  std::uint64_t d1 = a.w1 ^ b.w1;
  if (d1) return (a.w1 >> std::countr_zero(d1)) & 1;
  return false;
}

}  // namespace lottery

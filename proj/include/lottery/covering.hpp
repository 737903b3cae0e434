#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <vector>

#include "lottery/errors.hpp"

namespace lottery {

// Upper bounds for C(a,6,2), a = 6..27, harvested from the standard covering
// repository. These are the only covering numbers the artifact trusts.
inline constexpr int kCoverMin = 6;
inline constexpr int kCoverMax = 27;
inline constexpr std::array<int, 22> kCoverUpper = {
    1, 3, 3, 3, 4, 6, 6, 7, 7, 10, 10, 12, 12, 15, 16, 17, 19, 21, 22, 23, 24, 27};

inline int covering_upper(int a) {
  if (a < kCoverMin || a > kCoverMax)
    throw OutOfTableRange("C(a,6,2) table covers 6..27, got a=" + std::to_string(a));
  return kCoverUpper[a - kCoverMin];
}

inline void write_covering_table(std::ostream& out) {
  for (int a = kCoverMin; a <= kCoverMax; ++a)
    out << a << ' ' << kCoverUpper[a - kCoverMin] << '\n';
}

// Two-column auditing format (a, C_upper). Returns values indexed from 6.
inline std::vector<int> read_covering_table(std::istream& in) {
  std::vector<int> vals;
  int a, c;
  int expect = kCoverMin;
  while (in >> a >> c) {
    if (a != expect) throw ParseError("covering table rows must run 6..27 in order");
    if (!vals.empty() && c < vals.back())
      throw ParseError("covering table must be monotone non-decreasing");
    vals.push_back(c);
    ++expect;
  }
  if (static_cast<int>(vals.size()) != kCoverMax - kCoverMin + 1)
    throw ParseError("covering table must have 22 rows");
  return vals;
}

struct PartitionWitness {
  std::vector<int> parts;  // ascending, each in 6..27
  int value = 0;           // sum of covering_upper over parts
};

namespace detail {

// All multisets of <= maxParts parts in 6..27 summing to n, tracking for each
// achievable value sum the lexicographically least ascending part list.
inline void partition_dfs(int n, int maxParts, int minPart, std::vector<int>& cur,
                          int value, std::vector<std::vector<int>>& best_parts,
                          std::vector<char>& reachable) {
  if (n == 0) {
    if (!reachable[value] || cur < best_parts[value]) {
      reachable[value] = 1;
      best_parts[value] = cur;
    }
    return;
  }
  if (maxParts == 0) return;
  for (int a = minPart; a <= kCoverMax && a <= n; ++a) {
    if (n - a > 0 && n - a < a) continue;  // remaining must fit non-decreasing parts
    if (n > a + kCoverMax * (maxParts - 1)) continue;
    cur.push_back(a);
    partition_dfs(n - a, maxParts - 1, a, cur, value + covering_upper(a), best_parts,
                  reachable);
    cur.pop_back();
  }
}

struct PartitionSums {
  std::vector<char> reachable;             // by value
  std::vector<std::vector<int>> parts;     // lex-least parts per value
};

inline PartitionSums partition_sums(int n, int maxParts) {
  PartitionSums ps;
  int maxValue = maxParts * covering_upper(kCoverMax) + 1;
  ps.reachable.assign(maxValue + 1, 0);
  ps.parts.assign(maxValue + 1, {});
  std::vector<int> cur;
  partition_dfs(n, maxParts, kCoverMin, cur, 0, ps.parts, ps.reachable);
  return ps;
}

}  // namespace detail

// Least achievable sum of covering numbers over <= maxParts parts totalling n.
inline PartitionWitness best_partition_upper(int n, int maxParts = 5) {
  if (n < kCoverMin || n > kCoverMax * maxParts)
    throw Infeasible("n=" + std::to_string(n) + " not expressible with <= " +
                     std::to_string(maxParts) + " parts in 6..27");
  auto ps = detail::partition_sums(n, maxParts);
  for (int v = 0; v < static_cast<int>(ps.reachable.size()); ++v)
    if (ps.reachable[v]) return {ps.parts[v], v};
  throw Infeasible("n=" + std::to_string(n) + " not expressible as a covering partition");
}

// Smallest achievable value >= guess, with its witness. Mirrors the recursive
// upper-bound predicate: try guess, then guess+1, and so on.
inline std::pair<int, PartitionWitness> upper_bound_search(int n, int guess) {
  if (guess < 1) throw PreconditionFailed("guess must be >= 1");
  auto ps = detail::partition_sums(n, 5);
  for (int v = std::max(0, guess); v < static_cast<int>(ps.reachable.size()); ++v)
    if (ps.reachable[v]) return {v, {ps.parts[v], v}};
  throw Infeasible("no covering partition of n=" + std::to_string(n) +
                   " with value >= " + std::to_string(guess));
}

}  // namespace lottery

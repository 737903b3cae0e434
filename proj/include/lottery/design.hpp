#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lottery/bitset.hpp"
#include "lottery/errors.hpp"

namespace lottery {

// A k-uniform block multiset over vertices 1..n. Blocks are kept sorted in
// the canonical order (lexicographic on ascending member lists). Duplicate
// blocks are permitted but flagged; they never change lottery validity.
struct Design {
  int n = 0;
  int k = 0;
  std::vector<Block128> blocks;

  int size() const { return static_cast<int>(blocks.size()); }

  void canonicalize() {
    std::sort(blocks.begin(), blocks.end(),
              [](const Block128& a, const Block128& b) { return lex_less(a, b); });
  }

  bool has_duplicate_blocks() const {
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (blocks[i] == blocks[i - 1]) return true;
    return false;
  }

  // Canonical form with duplicate blocks removed (set semantics).
  Design deduplicated() const {
    Design d = *this;
    d.blocks.erase(std::unique(d.blocks.begin(), d.blocks.end()), d.blocks.end());
    return d;
  }

  // d(v) for v in 1..n; index 0 unused.
  std::vector<int> degrees() const {
    std::vector<int> d(n + 1, 0);
    for (const auto& b : blocks)
      b.for_each([&](int v) { ++d[v]; });
    return d;
  }

  // Per-vertex incidence: indices of the blocks containing v.
  std::vector<std::vector<int>> incidence() const {
    std::vector<std::vector<int>> inc(n + 1);
    for (int i = 0; i < size(); ++i)
      blocks[i].for_each([&](int v) { inc[v].push_back(i); });
    return inc;
  }

  std::vector<std::vector<int>> block_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.vertices());
    return out;
  }
};

inline Design make_design(int n, int k, const std::vector<std::vector<int>>& blocks) {
  if (n < 1 || n > 128)
    throw VertexOutOfRange("vertex count must be in 1..128, got " + std::to_string(n));
  if (k < 1 || k > n)
    throw BlockSizeMismatch("block size " + std::to_string(k) + " invalid for n=" +
                            std::to_string(n));
  Design d;
  d.n = n;
  d.k = k;
  d.blocks.reserve(blocks.size());
  for (const auto& lst : blocks) {
    Block128 b;
    for (int v : lst) {
      if (v < 1 || v > n)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." +
                               std::to_string(n));
      b.set(v);
    }
    if (b.count() != k || static_cast<int>(lst.size()) != k)
      throw BlockSizeMismatch("block must have exactly " + std::to_string(k) +
                              " distinct members");
    d.blocks.push_back(b);
  }
  d.canonicalize();
  return d;
}

// d_i counts plus the two degree-sum identities, asserted on construction.
struct DegreeHistogram {
  std::vector<long> d;  // d[i] = # vertices of degree i

  long count(int i) const {
    return (i >= 0 && i < static_cast<int>(d.size())) ? d[i] : 0;
  }
};

inline DegreeHistogram degree_histogram(const Design& D) {
  auto deg = D.degrees();
  int maxd = 0;
  for (int v = 1; v <= D.n; ++v) maxd = std::max(maxd, deg[v]);
  DegreeHistogram h;
  h.d.assign(maxd + 1, 0);
  long sum = 0, mass = 0;
  for (int v = 1; v <= D.n; ++v) {
    ++h.d[deg[v]];
  }
  for (int i = 0; i <= maxd; ++i) {
    sum += h.d[i];
    mass += static_cast<long>(i) * h.d[i];
  }
  if (sum != D.n || mass != static_cast<long>(D.size()) * D.k)
    throw Error("degree histogram identities violated");
  return h;
}

// Excess of Y: total degree above two, summed over members of Y.
inline long excess(const Design& D, const Block128& Y) {
  auto deg = D.degrees();
  long e = 0;
  Y.for_each([&](int v) {
    if (deg[v] > 2) e += deg[v] - 2;
  });
  return e;
}

inline long excess_all(const Design& D) {
  Block128 all;
  for (int v = 1; v <= D.n; ++v) all.set(v);
  return excess(D, all);
}

// Symmetric pair-coverage relation: covered(x,y) iff some block holds both.
struct PairCoverage {
  int n = 0;
  std::vector<Block128> row;  // row[v] = vertices co-blocked with v, v in 1..n

  bool covered(int x, int y) const { return row[x].test(y); }
};

inline PairCoverage pair_coverage(const Design& D) {
  PairCoverage pc;
  pc.n = D.n;
  pc.row.assign(D.n + 1, Block128{});
  for (const auto& b : D.blocks) {
    b.for_each([&](int v) {
      pc.row[v] |= b;
    });
  }
  for (int v = 1; v <= D.n; ++v) pc.row[v].reset(v);
  return pc;
}

inline std::vector<int> isolated_block_indices(const Design& D) {
  std::vector<int> out;
  for (int i = 0; i < D.size(); ++i) {
    bool iso = true;
    for (int j = 0; j < D.size() && iso; ++j)
      if (j != i && D.blocks[i].intersects(D.blocks[j])) iso = false;
    if (iso) out.push_back(i);
  }
  return out;
}

// Segregated: d_0 = 0 and every degree-1 vertex lies in an isolated block.
inline bool is_segregated(const Design& D) {
  auto deg = D.degrees();
  Block128 iso;
  for (int i : isolated_block_indices(D)) iso |= D.blocks[i];
  for (int v = 1; v <= D.n; ++v) {
    if (deg[v] == 0) return false;
    if (deg[v] == 1 && !iso.test(v)) return false;
  }
  return true;
}

}  // namespace lottery

#pragma once

#include <array>
#include <vector>

#include "lottery/design.hpp"

namespace lottery {

struct ShannonSub {
  std::array<int, 3> block_indices;  // ascending
  Block128 vertices;
};

// Block triples {B1,B2,B3} with |B1^B2| = |B2^B3| = floor(k/2) and
// |B1^B3| = floor((k+1)/2), all vertices of the union having degree 2 in D
// with at most one exception. For even k a reported triple must further be a
// disjoint component: no member vertex appears in a block outside the triple.
inline std::vector<ShannonSub> find_shannon_subhypergraphs(const Design& D) {
  std::vector<ShannonSub> out;
  const int j = D.size();
  if (j < 3) return out;
  const int lo = D.k / 2;
  const int hi = (D.k + 1) / 2;
  auto deg = D.degrees();
  auto inc = D.incidence();

  for (int a = 0; a < j; ++a)
    for (int b = a + 1; b < j; ++b)
      for (int c = b + 1; c < j; ++c) {
        int ab = D.blocks[a].intersection_size(D.blocks[b]);
        int bc = D.blocks[b].intersection_size(D.blocks[c]);
        int ac = D.blocks[a].intersection_size(D.blocks[c]);
        // some ordering (B1,B2,B3) of the triple must realize (lo, lo, hi)
        bool shape = (ab == lo && bc == lo && ac == hi) ||
                     (ab == lo && ac == lo && bc == hi) ||
                     (ac == lo && bc == lo && ab == hi);
        if (!shape) continue;
        Block128 uni = D.blocks[a] | D.blocks[b] | D.blocks[c];
        int exceptions = 0;
        bool closed = true;
        uni.for_each([&](int v) {
          if (deg[v] != 2) ++exceptions;
          for (int bi : inc[v])
            if (bi != a && bi != b && bi != c) closed = false;
        });
        if (exceptions > 1) continue;
        if (D.k % 2 == 0 && !closed) continue;
        out.push_back({{a, b, c}, uni});
      }
  return out;
}

}  // namespace lottery

#pragma once

#include <algorithm>
#include <vector>

#include "lottery/design.hpp"
#include "lottery/errors.hpp"
#include "lottery/verify.hpp"

namespace lottery {

namespace detail {

// The constructive reductions re-verify inputs and outputs whenever the draw
// space is small enough to enumerate quickly.
inline bool small_enough_to_verify(const Design& D, int p) {
  double c = 1.0;
  for (int i = 0; i < p; ++i) c *= double(D.n - i) / double(i + 1);
  return c <= 2.0e8;
}

inline void guard_valid(const Design& D, int p, int t, const char* who) {
  if (!small_enough_to_verify(D, p)) return;
  if (!verify_exhaustive(D, p, t).valid)
    throw PreconditionFailed(std::string(who) + ": input is not a lottery design");
}

inline void assert_valid(const Design& D, int p, int t, const char* who) {
  if (!small_enough_to_verify(D, p)) return;
  if (!verify_exhaustive(D, p, t).valid)
    throw Error(std::string(who) + ": reduction produced an invalid design");
}

}  // namespace detail

// Move each degree-0 vertex into a block in place of a degree->=2 vertex.
// Choices are deterministic: smallest degree-0 label, and the smallest
// degree->=2 label inside the lexicographically first qualifying block.
inline Design eliminate_degree_zero(const Design& D, int p, int t) {
  if (static_cast<long>(D.size()) * D.k < D.n)
    throw PreconditionFailed("eliminate_degree_zero: requires j >= n/k");
  detail::guard_valid(D, p, t, "eliminate_degree_zero");

  Design cur = D;
  for (;;) {
    auto deg = cur.degrees();
    int x = 0;
    for (int v = 1; v <= cur.n; ++v)
      if (deg[v] == 0) {
        x = v;
        break;
      }
    if (!x) break;
    int block = -1, y = 0;
    for (int i = 0; i < cur.size() && block < 0; ++i) {
      int cand = 0;
      cur.blocks[i].for_each([&](int v) {
        if (deg[v] >= 2 && (cand == 0 || v < cand)) cand = v;
      });
      if (cand) {
        block = i;
        y = cand;
      }
    }
    if (block < 0) throw Error("eliminate_degree_zero: no degree->=2 vertex found");
    cur.blocks[block].reset(y);
    cur.blocks[block].set(x);
    cur.canonicalize();
  }
  detail::assert_valid(cur, p, t, "eliminate_degree_zero");
  return cur;
}

// Make every degree-1 vertex live in an isolated block by repeatedly taking a
// non-isolated block with a degree-1 member x and a degree->1 member y and
// substituting non-isolated vertices for y in all its other blocks. The
// "any other vertex" freedom is resolved as the smallest eligible label.
inline Design segregate(const Design& D, int p, int t) {
  if (D.n < D.k * (p - 1))
    throw PreconditionFailed("segregate: requires n >= k(p-1)");
  {
    auto deg = D.degrees();
    for (int v = 1; v <= D.n; ++v)
      if (deg[v] == 0) throw PreconditionFailed("segregate: requires d_0 = 0");
  }
  detail::guard_valid(D, p, t, "segregate");

  Design cur = D;
  long fuel = 10L * D.n * std::max(1, D.size()) + 100;
  for (;;) {
    if (--fuel < 0) throw Error("segregate: did not converge");
    auto deg = cur.degrees();
    auto iso = isolated_block_indices(cur);
    Block128 iso_mask;
    for (int i : iso) iso_mask |= cur.blocks[i];

    int bsel = -1, x = 0, y = 0;
    for (int i = 0; i < cur.size() && bsel < 0; ++i) {
      bool isolated = std::find(iso.begin(), iso.end(), i) != iso.end();
      if (isolated) continue;
      int deg1 = 0, degm = 0;
      cur.blocks[i].for_each([&](int v) {
        if (deg[v] == 1 && (deg1 == 0 || v < deg1)) deg1 = v;
        if (deg[v] > 1 && (degm == 0 || v < degm)) degm = v;
      });
      if (deg1 && degm) {
        bsel = i;
        x = deg1;
        y = degm;
      }
    }
    if (bsel < 0) break;  // segregated

    // y's blocks: keep B1 = bsel, rewrite the others. Substitutes must avoid
    // B1 as well as B_i, otherwise the smallest-label rule can relink B1's
    // members and cycle; with the exclusion, each step strips one degree->1
    // member from B1 until it is isolated.
    Block128 b1 = cur.blocks[bsel];
    std::vector<int> yblocks;
    for (int i = 0; i < cur.size(); ++i)
      if (cur.blocks[i].test(y) && i != bsel) yblocks.push_back(i);
    for (int i : yblocks) {
      int z = 0;
      for (int v = 1; v <= cur.n; ++v) {
        if (iso_mask.test(v)) continue;
        if (cur.blocks[i].test(v) || b1.test(v)) continue;
        z = v;
        break;
      }
      if (!z) throw Error("segregate: no eligible substitute vertex");
      cur.blocks[i].reset(y);
      cur.blocks[i].set(z);
    }
    cur.canonicalize();
    (void)x;
  }
  detail::assert_valid(cur, p, t, "segregate");
  return cur;
}

// Delete vertex x: substitute the smallest vertex outside B for x in every
// block B containing it, then drop the label and shift the ones above down.
inline Design delete_vertex(const Design& D, int x, int p, int t) {
  if (x < 1 || x > D.n) throw VertexOutOfRange("delete_vertex: x outside 1..n");
  Design cur = D;
  for (auto& b : cur.blocks) {
    if (!b.test(x)) continue;
    int z = 0;
    for (int v = 1; v <= cur.n; ++v)
      if (v != x && !b.test(v)) {
        z = v;
        break;
      }
    if (!z) throw Error("delete_vertex: no substitute vertex available");
    b.reset(x);
    b.set(z);
  }
  Design out;
  out.n = D.n - 1;
  out.k = D.k;
  for (const auto& b : cur.blocks) {
    Block128 nb;
    b.for_each([&](int v) { nb.set(v > x ? v - 1 : v); });
    if (nb.count() != D.k) throw Error("delete_vertex: uniformity lost");
    out.blocks.push_back(nb);
  }
  out.canonicalize();
  detail::assert_valid(out, p, t, "delete_vertex");
  return out;
}

}  // namespace lottery

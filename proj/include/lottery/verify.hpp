#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "lottery/design.hpp"
#include "lottery/errors.hpp"

namespace lottery {

enum class VerifyMethod { exhaustive, clique, both };

struct Verdict {
  bool valid = false;
  std::vector<int> witness;  // lexicographically least failing draw when invalid
};

namespace detail {

inline Block128 full_set(int n) {
  Block128 b;
  for (int v = 1; v <= n; ++v) b.set(v);
  return b;
}

inline Block128 and_not(const Block128& a, const Block128& b) {
  return {a.w0 & ~b.w0, a.w1 & ~b.w1};
}

// Draw enumeration in lexicographic order with per-block hit counters. Once
// some block reaches t hits, every completion of the partial draw is covered
// and the subtree is skipped, so the first leaf reached is the least failing
// draw.
struct ExhaustiveSearch {
  const Design& D;
  int p, t;
  const std::vector<std::vector<int>>& inc;
  std::vector<int> hits;
  std::vector<int> cur;
  std::vector<int> found;

  ExhaustiveSearch(const Design& d, int p_, int t_, const std::vector<std::vector<int>>& inc_)
      : D(d), p(p_), t(t_), inc(inc_), hits(d.size(), 0) {}

  bool dfs(int from, int depth) {
    if (depth == p) {
      found = cur;
      return true;
    }
    int need = p - depth;
    for (int v = from; v + need - 1 <= D.n; ++v) {
      bool sat = false;
      for (int bi : inc[v])
        if (++hits[bi] >= t) sat = true;
      if (!sat) {
        cur.push_back(v);
        bool hit = dfs(v + 1, depth + 1);
        cur.pop_back();
        if (hit) {
          for (int bi : inc[v]) --hits[bi];
          return true;
        }
      }
      for (int bi : inc[v]) --hits[bi];
    }
    return false;
  }
};

// Branch-and-bound maximum clique with greedy colouring bound. Vertex order
// is ascending label throughout, so results are reproducible.
struct CliqueEngine {
  int n;
  const std::vector<Block128>& adj;
  int cap;
  int best = 0;
  bool done = false;
  std::vector<int> cur, best_set;

  CliqueEngine(int n_, const std::vector<Block128>& adj_, int cap_)
      : n(n_), adj(adj_), cap(cap_) {}

  void expand(Block128 P) {
    if (static_cast<int>(cur.size()) > best) {
      best = static_cast<int>(cur.size());
      best_set = cur;
      std::sort(best_set.begin(), best_set.end());
      if (best >= cap) {
        done = true;
        return;
      }
    }
    if (P.none()) return;
    if (static_cast<int>(cur.size()) + P.count() <= best) return;

    // greedy colouring; vertices recorded in ascending colour order
    std::vector<std::pair<int, int>> order;
    Block128 Q = P;
    int c = 0;
    while (Q.any()) {
      ++c;
      Block128 R = Q;
      while (R.any()) {
        int v = R.lowest();
        order.emplace_back(v, c);
        Q.reset(v);
        R.reset(v);
        R = and_not(R, adj[v]);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (done) return;
      auto [v, col] = *it;
      if (static_cast<int>(cur.size()) + col <= best) return;
      cur.push_back(v);
      expand(P & adj[v]);
      cur.pop_back();
      P.reset(v);
    }
  }

  // First p-clique in lexicographic order (as an ascending vertex list).
  bool lex_clique(int from, Block128 cand, int need, std::vector<int>& acc) {
    if (need == 0) return true;
    for (int v = from; v <= n; ++v) {
      if (!cand.test(v)) continue;
      Block128 rest = cand & adj[v];
      if (rest.count() < need - 1) continue;
      acc.push_back(v);
      if (lex_clique(v + 1, rest, need - 1, acc)) return true;
      acc.pop_back();
    }
    return false;
  }
};

}  // namespace detail

// Adjacency of the uncovered-pair graph: u ~ v iff {u,v} lies in no block.
inline std::vector<Block128> uncovered_adjacency(const Design& D) {
  auto pc = pair_coverage(D);
  Block128 all = detail::full_set(D.n);
  std::vector<Block128> adj(D.n + 1);
  for (int v = 1; v <= D.n; ++v) {
    adj[v] = detail::and_not(all, pc.row[v]);
    adj[v].reset(v);
  }
  return adj;
}

// Maximum-cardinality independent set, found as a clique of the uncovered
// graph; returns early once cap is reached.
inline std::vector<int> max_independent_set(const Design& D, int cap) {
  if (cap < 1) throw PreconditionFailed("cap must be >= 1");
  auto adj = uncovered_adjacency(D);
  detail::CliqueEngine eng(D.n, adj, cap);
  eng.expand(detail::full_set(D.n));
  return eng.best_set;
}

inline Verdict verify_exhaustive(const Design& D, int p, int t, int threads = 1) {
  Verdict v;
  if (p > D.n) {
    v.valid = true;
    return v;
  }
  auto inc = D.incidence();
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || D.n - p + 1 <= 1) {
    detail::ExhaustiveSearch s(D, p, t, inc);
    v.valid = !s.dfs(1, 0);
    if (!v.valid) v.witness = s.found;
    return v;
  }

  // Split on the first vertex of the draw; the least witness over all
  // first-vertex subtrees is the global least, independent of thread count.
  std::atomic<int> best_first{D.n + 1};
  int nworkers = std::min(threads, D.n - p + 1);
  std::vector<std::vector<int>> results(nworkers);
  std::vector<std::thread> pool;
  for (int w = 0; w < nworkers; ++w) {
    pool.emplace_back([&, w]() {
      detail::ExhaustiveSearch s(D, p, t, inc);
      for (int v1 = 1 + w; v1 + p - 1 <= D.n; v1 += nworkers) {
        if (v1 > best_first.load(std::memory_order_relaxed)) break;
        bool sat = false;
        for (int bi : inc[v1])
          if (++s.hits[bi] >= t) sat = true;
        if (!sat) {
          s.cur.assign(1, v1);
          if (s.dfs(v1 + 1, 1)) {
            results[w] = s.found;
            int prev = best_first.load();
            while (v1 < prev && !best_first.compare_exchange_weak(prev, v1)) {
            }
            for (int bi : inc[v1]) --s.hits[bi];
            break;
          }
        }
        for (int bi : inc[v1]) --s.hits[bi];
      }
    });
  }
  for (auto& th : pool) th.join();
  v.valid = true;
  for (const auto& r : results) {
    if (r.empty()) continue;
    if (v.valid || r < v.witness) {
      v.valid = false;
      v.witness = r;
    }
  }
  return v;
}

inline Verdict verify_clique(const Design& D, int p, int t) {
  if (t != 2) throw MethodUnsupported("clique verification requires t = 2");
  Verdict v;
  if (p > D.n) {
    v.valid = true;
    return v;
  }
  auto adj = uncovered_adjacency(D);
  detail::CliqueEngine eng(D.n, adj, p);
  eng.expand(detail::full_set(D.n));
  if (eng.best < p) {
    v.valid = true;
    return v;
  }
  v.valid = false;
  detail::CliqueEngine lex(D.n, adj, p);
  std::vector<int> acc;
  if (!lex.lex_clique(1, detail::full_set(D.n), p, acc))
    throw Error("internal: clique existence without lex witness");
  v.witness = acc;
  return v;
}

inline Verdict verify_lottery(const Design& D, int p, int t,
                              VerifyMethod method = VerifyMethod::both,
                              int threads = 1) {
  if (!(D.n >= D.k && D.k >= t && t >= 2))
    throw PreconditionFailed("need n >= k >= t >= 2");
  if (p < t) throw PreconditionFailed("need p >= t");
  switch (method) {
    case VerifyMethod::exhaustive:
      return verify_exhaustive(D, p, t, threads);
    case VerifyMethod::clique:
      return verify_clique(D, p, t);
    case VerifyMethod::both: {
      Verdict a = verify_exhaustive(D, p, t, threads);
      Verdict b = verify_clique(D, p, t);
      if (a.valid != b.valid || (!a.valid && a.witness != b.witness))
        throw Error("verifier disagreement between exhaustive and clique methods");
      return a;
    }
  }
  throw MethodUnsupported("unknown method");
}

}  // namespace lottery

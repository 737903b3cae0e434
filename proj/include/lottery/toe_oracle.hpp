#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lottery/errors.hpp"

namespace lottery {

// ---------------------------------------------------------------------------
// Minimal foot excess for a vertex with a prescribed toe distribution.
//
// A vertex x of degree d in {2,3} has its |F_x| = f toes split into parts
// (tau_1 >= tau_2 >= tau_3), one part per x-block, each part at most 5 (an
// x-block holds x plus five others). Toes from different parts must share a
// webbing; a webbing holds at most 6 toes. With M the webbing-incidence
// matrix, the excess of F_x is (sum of M) - f, and we minimise it by
// branch-and-bound over doubly-lex-canonical matrices.
// ---------------------------------------------------------------------------

inline constexpr int kToeTableMax = 15;

// Table of minimal excesses by toe count; the contract the solver reproduces.
inline int min_excess(int f) {
  static constexpr int T[16] = {0, 0, 0, 0, 0, 0, 0, 2, 3, 7, 10, 11, 12, 20, 25, 27};
  if (f < 0 || f > kToeTableMax)
    throw OutOfRange("min_excess: f must be in 0..15, got " + std::to_string(f));
  return T[f];
}

// Strengthened bound when no toe has degree 2: each toe then contributes at
// least one to the excess.
inline int min_excess_no_degree2(int f) {
  if (f < 7 || f > kToeTableMax)
    throw OutOfRange("min_excess_no_degree2: f must be in 7..15");
  return std::max(min_excess(f), f);
}

struct WebbingInstance {
  std::array<int, 3> parts{0, 0, 0};  // non-increasing, each in 0..5

  int f() const { return parts[0] + parts[1] + parts[2]; }
  int nonzero_parts() const {
    return (parts[0] > 0) + (parts[1] > 0) + (parts[2] > 0);
  }
};

inline WebbingInstance make_instance(std::vector<int> parts) {
  if (parts.size() < 2 || parts.size() > 3)
    throw PreconditionFailed("instance needs 2 or 3 parts");
  std::sort(parts.rbegin(), parts.rend());
  WebbingInstance in;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || parts[i] > 5)
      throw PreconditionFailed("part sizes must lie in 0..5");
    in.parts[i] = parts[i];
  }
  return in;
}

struct WebbingMatrix {
  int f = 0;
  std::array<int, 3> parts{0, 0, 0};
  std::vector<std::uint16_t> rows;  // bit c = column c; columns grouped by part

  int total_ones() const {
    int s = 0;
    for (auto r : rows) s += std::popcount(static_cast<unsigned>(r));
    return s;
  }
  int excess() const { return rows.empty() ? 0 : total_ones() - f; }
};

inline int webbing_part_of(const WebbingMatrix& m, int col) {
  if (col < m.parts[0]) return 0;
  if (col < m.parts[0] + m.parts[1]) return 1;
  return 2;
}

inline bool webbing_matrix_valid(const WebbingMatrix& m) {
  if (m.f != m.parts[0] + m.parts[1] + m.parts[2]) return false;
  if (m.parts[0] < m.parts[1] || m.parts[1] < m.parts[2] || m.parts[2] < 0) return false;
  if (m.parts[0] > 5) return false;
  int nz = (m.parts[0] > 0) + (m.parts[1] > 0) + (m.parts[2] > 0);
  if (nz <= 1) return m.rows.empty();
  std::uint32_t colsum[16] = {0};
  for (auto r : m.rows) {
    int pc = std::popcount(static_cast<unsigned>(r));
    if (pc > 6 || pc < 2) return false;
    if (r >> m.f) return false;
    for (int c = 0; c < m.f; ++c)
      if ((r >> c) & 1) ++colsum[c];
  }
  for (int c = 0; c < m.f; ++c)
    if (colsum[c] < 1) return false;
  for (int c1 = 0; c1 < m.f; ++c1)
    for (int c2 = c1 + 1; c2 < m.f; ++c2) {
      if (webbing_part_of(m, c1) == webbing_part_of(m, c2)) continue;
      bool hit = false;
      for (auto r : m.rows)
        if (((r >> c1) & 1) && ((r >> c2) & 1)) hit = true;
      if (!hit) return false;
    }
  return true;
}

struct SolveOptions {
  std::optional<int> budget;     // prove excess <= budget or infeasibility
  bool symmetry_breaking = true;
  int pinned = 0;                // columns required to have column sum <= 1
  int search_cap = 70;           // excesses above this count as infeasible
};

struct SolveResult {
  bool feasible = false;
  int value = 0;  // excess of the witness
  WebbingMatrix witness;
};

namespace toe_detail {

constexpr int kInf = 1 << 28;

struct RowShape {
  int a, b, c, cost;
};

// Shape-relaxation lower bound: minimal slot count of a row-shape multiset
// covering the given per-part-pair uncovered pair counts.
struct ShapeDp {
  int t1 = 0, t2 = 0, t3 = 0;
  int d2 = 0, d3 = 0;
  std::vector<RowShape> shapes;
  std::vector<int> memo;

  void init(int t1_, int t2_, int t3_) {
    t1 = t1_;
    t2 = t2_;
    t3 = t3_;
    d2 = t1 * t3 + 1;
    d3 = t2 * t3 + 1;
    shapes.clear();
    for (int a = 0; a <= std::min(6, t1); ++a)
      for (int b = 0; b <= std::min(6 - a, t2); ++b)
        for (int c = 0; c <= std::min(6 - a - b, t3); ++c)
          if (a * b + a * c + b * c >= 1) shapes.push_back({a, b, c, a + b + c});
    memo.assign(static_cast<std::size_t>(t1 * t2 + 1) * d2 * d3, -1);
  }

  int cost(int u1, int u2, int u3) {
    if (u1 <= 0 && u2 <= 0 && u3 <= 0) return 0;
    u1 = std::max(u1, 0);
    u2 = std::max(u2, 0);
    u3 = std::max(u3, 0);
    std::size_t idx = (static_cast<std::size_t>(u1) * d2 + u2) * d3 + u3;
    int& m = memo[idx];
    if (m >= 0) return m;
    m = kInf;
    for (const auto& s : shapes) {
      int covered = s.a * s.b + s.a * s.c + s.b * s.c;
      if (covered == 0) continue;
      int rec = cost(u1 - s.a * s.b, u2 - s.a * s.c, u3 - s.b * s.c);
      if (rec + s.cost < m) m = rec + s.cost;
    }
    return m;
  }
};

struct Solver {
  // instance
  int f = 0;
  std::array<int, 3> parts{};
  int part_of[16] = {};
  std::uint16_t cross_mask[16] = {};
  bool pinned[16] = {};

  // options
  bool sym = true;
  bool stop_in_budget = false;
  int budget_S = 0;  // used when stop_in_budget

  // state
  std::uint64_t sig[16] = {};
  std::uint16_t cov[16] = {};
  int upp[3] = {};  // uncovered pairs per part pair (01, 02, 12)
  int uncovered_sides = 0;
  std::vector<std::uint16_t> cur_rows;

  int best_S = kInf;
  std::vector<std::uint16_t> best_rows;
  bool done = false;
  ShapeDp dp;

  void init(const WebbingInstance& in, const SolveOptions& opts) {
    parts = in.parts;
    f = in.f();
    int at = 0;
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < parts[p]; ++i) part_of[at++] = p;
    for (int c = 0; c < f; ++c) {
      std::uint16_t m = 0;
      for (int c2 = 0; c2 < f; ++c2)
        if (part_of[c2] != part_of[c]) m |= std::uint16_t(1) << c2;
      cross_mask[c] = m;
    }
    for (int c = 0; c < f; ++c) pinned[c] = false;
    // pinned columns occupy the front of their part; the caller picks the part
    sym = opts.symmetry_breaking;
    upp[0] = parts[0] * parts[1];
    upp[1] = parts[0] * parts[2];
    upp[2] = parts[1] * parts[2];
    uncovered_sides = 2 * (upp[0] + upp[1] + upp[2]);
    dp.init(parts[0], parts[1], parts[2]);
  }

  void pin_prefix_of_part(int part, int count) {
    int base = 0;
    for (int p = 0; p < part; ++p) base += parts[p];
    for (int i = 0; i < count; ++i) pinned[base + i] = true;
  }

  int pair_index(int p1, int p2) const {
    if (p1 > p2) std::swap(p1, p2);
    if (p1 == 0) return p2 == 1 ? 0 : 1;
    return 2;
  }

  int lower_bound() {
    int colLB = 0;
    for (int c = 0; c < f; ++c) {
      std::uint16_t unc = cross_mask[c] & ~cov[c];
      int u = std::popcount(static_cast<unsigned>(unc));
      if (u == 0) continue;
      if (pinned[c]) {
        if (sig[c] != 0) return kInf;  // saturated pinned column, pairs left
        if (u > 5) return kInf;        // its single row cannot host them
        colLB += 1;
      } else {
        colLB += (u + 4) / 5;
      }
    }
    int dpLB = dp.cost(upp[0], upp[1], upp[2]);
    // cross-slot supply: a slot in a row of shape (a,b,c) serves its column
    // with 6-a cross partners, so one slot supplies at most 4 coverage sides
    // (shape (2,2,2)); with two parts the best shape (3,3) supplies 3
    int rate = parts[2] > 0 ? 4 : 3;
    int supLB = (uncovered_sides + rate - 1) / rate;
    return std::max({colLB, dpLB, supLB});
  }

  // row comparison with column 0 most significant
  static bool row_leq(std::uint16_t a, std::uint16_t b, int f) {
    for (int c = 0; c < f; ++c) {
      int x = (a >> c) & 1, y = (b >> c) & 1;
      if (x != y) return x < y;
    }
    return true;
  }

  struct Group {
    int begin, end;   // column range
    bool blocked;     // saturated pinned group
  };

  std::vector<Group> current_groups() const {
    std::vector<Group> gs;
    int c = 0;
    while (c < f) {
      int d = c + 1;
      while (d < f && part_of[d] == part_of[c] && sig[d] == sig[c] &&
             pinned[d] == pinned[c])
        ++d;
      gs.push_back({c, d, pinned[c] && sig[c] != 0});
      c = d;
    }
    return gs;
  }

  void gen_rows(const std::vector<Group>& gs, std::size_t gi, int slots,
                std::uint16_t mask, std::vector<std::uint16_t>& out) {
    if (gi == gs.size()) {
      if (std::popcount(static_cast<unsigned>(mask)) >= 2) out.push_back(mask);
      return;
    }
    const Group& g = gs[gi];
    int cap = g.blocked ? 0 : std::min(slots, g.end - g.begin);
    for (int take = cap; take >= 0; --take) {
      std::uint16_t m2 = mask;
      for (int i = 0; i < take; ++i) m2 |= std::uint16_t(1) << (g.begin + i);
      gen_rows(gs, gi + 1, slots - take, m2, out);
    }
  }

  int row_new_sides(std::uint16_t row) const {
    int sides = 0;
    std::uint16_t r = row;
    while (r) {
      int c = std::countr_zero(static_cast<unsigned>(r));
      r &= r - 1;
      sides += std::popcount(static_cast<unsigned>(row & cross_mask[c] & ~cov[c]));
    }
    return sides;
  }

  void apply_row(std::uint16_t row, std::uint16_t saved_cov[16]) {
    std::uint16_t r = row;
    while (r) {
      int c = std::countr_zero(static_cast<unsigned>(r));
      r &= r - 1;
      saved_cov[c] = cov[c];
      std::uint16_t fresh = row & cross_mask[c] & ~cov[c];
      std::uint16_t ff = fresh;
      while (ff) {
        int c2 = std::countr_zero(static_cast<unsigned>(ff));
        ff &= ff - 1;
        --upp[pair_index(part_of[c], part_of[c2])];
      }
      uncovered_sides -= std::popcount(static_cast<unsigned>(fresh));
      cov[c] |= row & cross_mask[c];
      sig[c] = (sig[c] << 1) | 1;
    }
    for (int c = 0; c < f; ++c)
      if (!((row >> c) & 1)) sig[c] <<= 1;
  }

  void undo_row(std::uint16_t row, const std::uint16_t saved_cov[16]) {
    std::uint16_t r = row;
    while (r) {
      int c = std::countr_zero(static_cast<unsigned>(r));
      r &= r - 1;
      std::uint16_t fresh = cov[c] & ~saved_cov[c];
      std::uint16_t ff = fresh;
      while (ff) {
        int c2 = std::countr_zero(static_cast<unsigned>(ff));
        ff &= ff - 1;
        ++upp[pair_index(part_of[c], part_of[c2])];
      }
      uncovered_sides += std::popcount(static_cast<unsigned>(fresh));
      cov[c] = saved_cov[c];
    }
    for (int c = 0; c < f; ++c) sig[c] >>= 1;
  }

  void record_solution(int S) {
    if (S < best_S) {
      best_S = S;
      best_rows = cur_rows;
      if (stop_in_budget && best_S <= budget_S) done = true;
    }
  }

  void search(int S, std::uint16_t prev_mask) {
    if (done) return;
    if (uncovered_sides == 0) {
      record_solution(S);
      return;
    }
    int lb = lower_bound();
    if (lb >= kInf || S + lb >= best_S) return;

    auto gs = current_groups();
    std::vector<std::uint16_t> cands;
    gen_rows(gs, 0, 6, 0, cands);
    // prefer rows that close many pairs; deterministic tie-break on the mask
    std::vector<std::pair<int, std::uint16_t>> ordered;
    ordered.reserve(cands.size());
    for (auto rmask : cands) {
      if (sym && !row_leq(rmask, prev_mask, f)) continue;
      int gain = row_new_sides(rmask);
      if (gain == 0) continue;
      ordered.emplace_back(gain * 32 - std::popcount(static_cast<unsigned>(rmask)),
                           rmask);
    }
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [w, rmask] : ordered) {
      (void)w;
      int cost = std::popcount(static_cast<unsigned>(rmask));
      if (S + cost >= best_S) continue;
      std::uint16_t saved_cov[16];
      apply_row(rmask, saved_cov);
      cur_rows.push_back(rmask);
      search(S + cost, rmask);
      cur_rows.pop_back();
      undo_row(rmask, saved_cov);
      if (done) return;
    }
  }
};

}  // namespace toe_detail

namespace toe_detail {

// decision run: is there a matrix with excess <= budget? stops at the first
// witness found
inline bool solve_decision(const WebbingInstance& inst, int budget, bool sym,
                           int pinned_part, int pinned_count,
                           std::vector<std::uint16_t>* rows_out) {
  Solver s;
  SolveOptions tmp;
  tmp.symmetry_breaking = sym;
  s.init(inst, tmp);
  if (pinned_count > 0) s.pin_prefix_of_part(pinned_part, pinned_count);
  s.best_S = inst.f() + budget + 1;
  s.stop_in_budget = true;
  s.budget_S = inst.f() + budget;
  s.search(0, 0xFFFF);
  if (s.best_S > inst.f() + budget) return false;
  if (rows_out) *rows_out = s.best_rows;
  return true;
}

}  // namespace toe_detail

// Minimal excess over webbing matrices for one instance. With a budget the
// search stops at the first witness within it, or exhausts to prove none
// exists; without one the exact minimum is found by deepening the budget from
// the shape-relaxation bound (each decision run prunes against a tight bound,
// which is far faster than one open-ended optimisation).
inline SolveResult min_excess_for_instance(const WebbingInstance& inst,
                                           const SolveOptions& opts = {}) {
  SolveResult res;
  res.witness.f = inst.f();
  res.witness.parts = inst.parts;
  if (inst.nonzero_parts() <= 1) {
    if (opts.pinned > inst.f()) return res;
    res.feasible = true;
    res.value = 0;
    return res;
  }

  std::vector<int> pin_parts;
  if (opts.pinned > 0) {
    for (int p = 0; p < 3; ++p) {
      // pinned columns live in a single part: a pinned column's lone webbing
      // must hold every cross-part toe, which rules out split pinning as soon
      // as f > 6, and f <= 6 instances are resolved before reaching here
      if (inst.parts[p] < opts.pinned) continue;
      if (p > 0 && inst.parts[p] == inst.parts[p - 1]) continue;  // symmetric
      pin_parts.push_back(p);
    }
    if (pin_parts.empty()) return res;
  } else {
    pin_parts.push_back(-1);
  }

  auto run = [&](int budget, std::vector<std::uint16_t>* rows) {
    for (int p : pin_parts)
      if (toe_detail::solve_decision(inst, budget, opts.symmetry_breaking,
                                     p < 0 ? 0 : p, p < 0 ? 0 : opts.pinned, rows))
        return true;
    return false;
  };

  if (opts.budget) {
    std::vector<std::uint16_t> rows;
    if (!run(*opts.budget, &rows)) return res;
    res.feasible = true;
    res.witness.rows = rows;
    res.value = res.witness.excess();
    return res;
  }

  for (int v = 0; v <= opts.search_cap; ++v) {
    std::vector<std::uint16_t> rows;
    if (run(v, &rows)) {
      res.feasible = true;
      res.witness.rows = rows;
      res.value = res.witness.excess();
      return res;
    }
  }
  return res;
}

inline std::vector<WebbingInstance> instances_for(int f) {
  std::vector<WebbingInstance> out;
  for (int d = 2; d <= 3; ++d)
    for (int t1 = 5; t1 >= 1; --t1)
      for (int t2 = t1; t2 >= 0; --t2) {
        if (d == 2) {
          if (t1 + t2 == f && t2 <= t1) out.push_back(make_instance({t1, t2}));
        } else {
          int t3 = f - t1 - t2;
          if (t3 >= 0 && t3 <= t2) out.push_back(make_instance({t1, t2, t3}));
        }
      }
  // dedupe: (t1,t2) and (t1,t2,0) describe the same column structure but we
  // keep both, matching the per-degree view; the minimum is unaffected
  return out;
}

// Full minimisation over all instances with toe count f.
inline SolveResult min_excess_computed(int f, const SolveOptions& opts = {}) {
  if (f < 0 || f > kToeTableMax) throw OutOfRange("min_excess_computed: f in 0..15");
  SolveResult best;
  for (const auto& inst : instances_for(f)) {
    auto r = min_excess_for_instance(inst, opts);
    if (r.feasible && (!best.feasible || r.value < best.value)) best = r;
    if (best.feasible && best.value == 0) break;
  }
  if (f == 0) {
    best.feasible = true;
    best.value = 0;
  }
  return best;
}

// --- pinned-degree-2 variant used by the case pipeline ---------------------
//
// Minimal excess for a degree-2 vertex with tau toes of which at least `a`
// have degree exactly 2 (column sum <= 1 in the webbing matrix). Values above
// the search cap are reported as infeasible (kToePinnedInf).

inline constexpr int kToePinnedInf = toe_detail::kInf;

inline int min_excess_deg2_pinned_uncached(int tau, int a) {
  if (tau < 0 || tau > 10) throw OutOfRange("pinned: tau in 0..10");
  if (a < 0) throw OutOfRange("pinned: a >= 0");
  if (a > tau) return kToePinnedInf;
  // one webbing holding every toe pins all of them at degree 2
  if (tau <= 6) return 0;
  int best = kToePinnedInf;
  for (int t1 = std::min(5, tau); t1 >= (tau + 1) / 2; --t1) {
    int t2 = tau - t1;
    if (t2 > t1) continue;
    WebbingInstance inst = make_instance({t1, t2});
    SolveOptions opts;
    opts.pinned = a;
    opts.search_cap = 64;
    auto r = min_excess_for_instance(inst, opts);
    if (r.feasible) best = std::min(best, r.value);
  }
  return best;
}

inline int min_excess_deg2_pinned(int tau, int a) {
  static std::mutex mtx;
  static std::array<std::array<int, 12>, 11> cache = [] {
    std::array<std::array<int, 12>, 11> c{};
    for (auto& row : c) row.fill(-1);
    return c;
  }();
  if (tau < 0 || tau > 10) throw OutOfRange("pinned: tau in 0..10");
  if (a < 0) a = 0;
  if (a > tau) return kToePinnedInf;
  std::lock_guard<std::mutex> lock(mtx);
  int& slot = cache[tau][a];
  if (slot < 0) slot = min_excess_deg2_pinned_uncached(tau, a);
  return slot;
}

// --- table with witnesses and persistent cache -----------------------------

enum class Optimality { witness_only, proved };

struct ToeEntry {
  int f = 0;
  int value = 0;
  WebbingMatrix witness;
  Optimality optimality = Optimality::witness_only;
  bool optimality_verified = false;  // cleared when loaded from cache
};

struct ToeExcessTable {
  std::map<int, ToeEntry> entries;
  std::string provenance = "computed";
};

// Build the table: exact optimisation up to f = 12, budgeted witness search
// for 13..15. With prove_slow the one-below budgets are refuted as well,
// upgrading those entries to proved.
inline ToeExcessTable build_toe_table(int maxF, bool prove_slow = false) {
  if (maxF < 0 || maxF > kToeTableMax) throw OutOfRange("toe table: maxF in 0..15");
  ToeExcessTable t;
  for (int f = 0; f <= maxF; ++f) {
    ToeEntry e;
    e.f = f;
    if (f <= 12) {
      auto r = min_excess_computed(f);
      if (!r.feasible) throw Error("toe table: no witness for f=" + std::to_string(f));
      e.value = r.value;
      e.witness = r.witness;
      e.optimality = Optimality::proved;
      e.optimality_verified = true;
    } else {
      int target = min_excess(f);
      SolveResult found;
      for (const auto& inst : instances_for(f)) {
        SolveOptions opts;
        opts.budget = target;
        auto r = min_excess_for_instance(inst, opts);
        if (r.feasible && (!found.feasible || r.value < found.value)) {
          found = r;
          if (found.value <= target) break;
        }
      }
      if (!found.feasible || found.value > target)
        throw Error("toe table: witness search failed for f=" + std::to_string(f));
      e.value = found.value;
      e.witness = found.witness;
      e.optimality = Optimality::witness_only;
      if (prove_slow) {
        for (const auto& inst : instances_for(f)) {
          SolveOptions opts;
          opts.budget = target - 1;
          auto r = min_excess_for_instance(inst, opts);
          if (r.feasible)
            throw Error("toe table: budget " + std::to_string(target - 1) +
                        " unexpectedly feasible for f=" + std::to_string(f));
        }
        e.optimality = Optimality::proved;
        e.optimality_verified = true;
      }
    }
    if (e.value != min_excess(f))
      throw Error("toe table: computed value disagrees with table at f=" +
                  std::to_string(f));
    t.entries[f] = e;
  }
  return t;
}

inline void cache_store(const ToeExcessTable& t, const std::string& path) {
  nlohmann::json j;
  j["version"] = 1;
  auto& arr = j["entries"] = nlohmann::json::array();
  for (const auto& [f, e] : t.entries) {
    nlohmann::json je;
    je["f"] = f;
    je["value"] = e.value;
    je["parts"] = e.witness.parts;
    std::vector<std::string> rows;
    for (auto r : e.witness.rows) {
      std::string s(e.witness.f, '0');
      for (int c = 0; c < e.witness.f; ++c)
        if ((r >> c) & 1) s[c] = '1';
      rows.push_back(s);
    }
    je["rows"] = rows;
    je["optimality"] = e.optimality == Optimality::proved ? "proved" : "witness-only";
    arr.push_back(je);
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write cache file " + path);
  out << j.dump(2) << '\n';
}

inline ToeExcessTable cache_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorruptCache("cannot open cache file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw CorruptCache(std::string("cache parse error: ") + e.what());
  }
  ToeExcessTable t;
  t.provenance = "cached";
  if (!j.contains("version") || j["version"] != 1)
    throw CorruptCache("unsupported cache version");
  for (const auto& je : j["entries"]) {
    ToeEntry e;
    try {
      e.f = je.at("f").get<int>();
      e.value = je.at("value").get<int>();
      auto parts = je.at("parts").get<std::vector<int>>();
      if (parts.size() != 3) throw CorruptCache("entry parts must have 3 values");
      e.witness.parts = {parts[0], parts[1], parts[2]};
      e.witness.f = e.f;
      for (const auto& rs : je.at("rows").get<std::vector<std::string>>()) {
        if (static_cast<int>(rs.size()) != e.f)
          throw CorruptCache("row width mismatch");
        std::uint16_t m = 0;
        for (int c = 0; c < e.f; ++c) {
          if (rs[c] == '1')
            m |= std::uint16_t(1) << c;
          else if (rs[c] != '0')
            throw CorruptCache("row strings must be binary");
        }
        e.witness.rows.push_back(m);
      }
      std::string opt = je.at("optimality").get<std::string>();
      e.optimality = opt == "proved" ? Optimality::proved : Optimality::witness_only;
    } catch (const nlohmann::json::exception& ex) {
      throw CorruptCache(std::string("cache field error: ") + ex.what());
    }
    if (!webbing_matrix_valid(e.witness))
      throw CorruptCache("witness fails matrix invariants for f=" + std::to_string(e.f));
    if (e.witness.excess() != e.value)
      throw CorruptCache("witness excess disagrees with stored value for f=" +
                         std::to_string(e.f));
    e.optimality_verified = false;  // optimality claims are not re-proved on load
    t.entries[e.f] = e;
  }
  return t;
}

}  // namespace lottery

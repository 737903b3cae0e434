// Acceptance suite: one pass/fail line per criterion, all thresholds pinned.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "lottery/foot.hpp"
#include "lottery/furedi.hpp"
#include "lottery/pieces.hpp"
#include "lottery/pipeline.hpp"
#include "lottery/shannon.hpp"
#include "lottery/ticket_io.hpp"
#include "lottery/toe_oracle.hpp"
#include "lottery/verify.hpp"

using namespace lottery;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool ok, const std::string& what) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
            << std::endl;
}

Design random_design(std::mt19937_64& rng, int n, int j) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  for (int b = 0; b < j; ++b) {
    std::shuffle(all.begin(), all.end(), rng);
    blocks.push_back({all.begin(), all.begin() + 6});
  }
  return make_design(n, 6, blocks);
}

}  // namespace

TEST_CASE("criterion 1: construction and verification for every n in 32..70") {
  bool ok = true;
  for (const auto& row : kConfigTable) {
    auto D = assemble(config_for(row.n));
    if (D.n != row.n || D.size() != row.L) ok = false;
    if (!verify_lottery(D, 6, 2, VerifyMethod::both, 0).valid) ok = false;
  }

  auto D70 = assemble(config_for(70));
  auto t0 = Clock::now();
  bool v_ex = verify_exhaustive(D70, 6, 2, 1).valid;
  double ex_seconds = seconds_since(t0);
  t0 = Clock::now();
  bool v_cl = verify_clique(D70, 6, 2).valid;
  double cl_seconds = seconds_since(t0);
  CHECK(v_ex);
  CHECK(v_cl);
  CHECK(ex_seconds <= 60.0);
  CHECK(cl_seconds <= 1.0);
  if (!v_ex || !v_cl || ex_seconds > 60.0 || cl_seconds > 1.0) ok = false;

  std::ifstream golden(std::string(TEST_DATA_DIR) + "/n59_tickets.txt");
  REQUIRE(golden.good());
  std::stringstream buf;
  buf << golden.rdbuf();
  bool match59 = design_to_string(assemble(config_for(59))) == buf.str();
  CHECK(match59);
  if (!match59) ok = false;

  report(1, ok, "39 constructions verified; n=70 exhaustive " +
                    std::to_string(ex_seconds) + "s, clique " +
                    std::to_string(cl_seconds) + "s; n=59 matches the published set");
  REQUIRE(ok);
}

TEST_CASE("criterion 2: bound sandwich with equality at 32 and 70") {
  bool sandwich = true;
  for (const auto& row : kConfigTable) {
    if (furedi_lower(row.n, 6, 6) > row.L) sandwich = false;
    if (best_partition_upper(row.n).value != row.L) sandwich = false;
  }
  bool eq32 = furedi_lower(32, 6, 6) == 7;
  // Stated expectation: equality at n=70 with value 35. Composition brute
  // force (see the oracle in test_bounds) evaluates the bound to 32 there:
  // 11+11+16+16+16 costs 188 < 210 = five 14s. This sub-check is therefore
  // expected red; the lower bound at 70 is honestly 32 and the value 35 is
  // only reached by the full case analysis.
  long f70 = furedi_lower(70, 6, 6);
  bool eq70 = f70 == 35;
  bool ok = sandwich && eq32 && eq70;
  report(2, ok, "sandwich + equality at 32 " + std::string(eq32 ? "hold" : "FAIL") +
                    "; equality at 70 expects 35, brute force gives " +
                    std::to_string(f70));
  CHECK(sandwich);
  CHECK(eq32);
  CHECK(eq70);
}

TEST_CASE("criterion 3: toe table exact to f=12, witnesses for 13..15") {
  bool ok = true;
  auto t0 = Clock::now();
  for (int f = 0; f <= 12; ++f) {
    auto r = min_excess_computed(f);
    if (!r.feasible || r.value != min_excess(f)) ok = false;
  }
  double full_seconds = seconds_since(t0);
  if (full_seconds > 300.0) ok = false;

  double worst_witness = 0;
  for (int f : {13, 14, 15}) {
    t0 = Clock::now();
    bool found = false;
    for (const auto& inst : instances_for(f)) {
      SolveOptions opts;
      opts.budget = min_excess(f);
      auto r = min_excess_for_instance(inst, opts);
      if (r.feasible && r.value <= min_excess(f) && webbing_matrix_valid(r.witness)) {
        found = true;
        break;
      }
    }
    worst_witness = std::max(worst_witness, seconds_since(t0));
    if (!found || worst_witness > 60.0) ok = false;
  }
  report(3, ok, "f<=12 proved in " + std::to_string(full_seconds) +
                    "s; witnesses 20/25/27 in <= " + std::to_string(worst_witness) +
                    "s each (optimality proofs are the opt-in slow suite)");
  REQUIRE(ok);
}

TEST_CASE("criterion 4: the n=47 replay against the golden trace") {
  bool ok = true;
  auto pairs = rs_pairs(47, 16);
  std::vector<std::pair<int, int>> expect = {{0, 0}, {0, 1}, {0, 2}, {0, 3},
                                             {0, 4}, {1, 0}, {1, 1}, {2, 0}};
  if (pairs != expect) ok = false;

  auto c = make_context(47, 16, 1, 1);
  if (c.excess != 8) ok = false;
  auto profs = delta_profiles(c);
  if (profs.size() != 1 || profile_string(profs[0]) != "(1,2,2,2,2)") ok = false;
  if (min_toes(c, {2, 2, 2}) != 28) ok = false;
  ToeAnalysis a;
  a.ctx = c;
  a.order = 5;
  a.kappa_forcing = true;
  a.tail = {2, 2, 2};
  if (!populate_toes(a).empty()) ok = false;

  std::ifstream golden(std::string(TEST_DATA_DIR) + "/n47_trace.txt");
  REQUIRE(golden.good());
  std::stringstream buf;
  buf << golden.rdbuf();
  if (replay_trace(47, 16) != buf.str()) ok = false;

  report(4, ok, "rs pairs, Excess=8, profile (1,2,2,2,2), MinToes=28, empty toe set, "
                "byte-exact golden trace");
  REQUIRE(ok);
}

TEST_CASE("criterion 5: end-to-end theorem on 32..70") {
  auto t0 = Clock::now();
  auto reports = range_report(32, 70, 1);  // single-threaded
  double total_seconds = seconds_since(t0);
  bool ok = total_seconds <= 600.0;
  int proved = 0;
  for (const auto& cert : reports) {
    if (cert.status != "proved") {
      ok = false;
      continue;
    }
    ++proved;
    if (cert.L != table_value(cert.n)) ok = false;
    for (const auto& tr : cert.cases) {
      if (tr.excluded && tr.rule.find('[') == std::string::npos) ok = false;
      if (!tr.closed) ok = false;  // zero surviving exception cases
    }
  }
  if (proved != 39) ok = false;
  report(5, ok, std::to_string(proved) + "/39 proved with the published values in " +
                    std::to_string(total_seconds) + "s single-threaded");
  REQUIRE(ok);
}

TEST_CASE("criterion 6: oracle equivalence") {
  bool ok = true;
  std::mt19937_64 rng(20240901);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 10 + static_cast<int>(rng() % 9);
    int j = 1 + static_cast<int>(rng() % 8);
    auto D = random_design(rng, n, j);
    auto a = verify_exhaustive(D, 6, 2);
    auto b = verify_clique(D, 6, 2);
    if (a.valid != b.valid) ok = false;
    if (!a.valid && a.witness != b.witness) ok = false;
  }

  std::mt19937_64 rng2(777);
  int done = 0;
  while (done < 100) {
    int t1 = 1 + static_cast<int>(rng2() % 5);
    int t2 = static_cast<int>(rng2() % (t1 + 1));
    int t3 = (rng2() % 2) ? static_cast<int>(rng2() % (t2 + 1)) : -1;
    int f = t1 + t2 + std::max(0, t3);
    if (f > 9) continue;
    ++done;
    auto inst = make_instance(t3 >= 0 ? std::vector<int>{t1, t2, t3}
                                      : std::vector<int>{t1, t2});
    SolveOptions off;
    off.symmetry_breaking = false;
    auto a = min_excess_for_instance(inst);
    auto b = min_excess_for_instance(inst, off);
    if (a.feasible != b.feasible || (a.feasible && a.value != b.value)) ok = false;
  }
  report(6, ok, "200 exhaustive-vs-clique verdicts and 100 symmetry on/off optima agree");
  REQUIRE(ok);
}

TEST_CASE("criterion 7: property suites on every constructed design") {
  bool ok = true;
  for (const auto& row : kConfigTable) {
    auto D = assemble(config_for(row.n));
    auto deg = D.degrees();

    // histogram identities (asserted inside degree_histogram)
    auto h = degree_histogram(D);
    (void)h;

    // excess identity for segregated designs
    long r = static_cast<long>(isolated_block_indices(D).size());
    if (!is_segregated(D)) ok = false;
    if (excess_all(D) != 6L * D.size() + 6L * r - 2L * D.n) ok = false;

    // independence cap
    auto I = max_independent_set(D, 6);
    if (I.size() > 5) ok = false;

    // empirical extension bound: an independent set among the degree-2
    // vertices of size at least s + ceil((d2 - 9s)/8)
    long s = static_cast<long>(find_shannon_subhypergraphs(D).size());
    long d2 = 0;
    Block128 deg2mask;
    for (int v = 1; v <= D.n; ++v)
      if (deg[v] == 2) {
        ++d2;
        deg2mask.set(v);
      }
    long kappa = s + std::max(0L, ceil_div(d2 - 9 * s, 8));
    auto adj = uncovered_adjacency(D);
    for (int v = 1; v <= D.n; ++v) adj[v] &= deg2mask;
    detail::CliqueEngine eng(D.n, adj, 6);
    eng.expand(deg2mask);
    if (eng.best < kappa) ok = false;

    // foot disjointness
    auto rep = toes_and_foot(D, I);
    int total = 0;
    for (int t : rep.tau) total += t;
    if (total != rep.foot.count()) ok = false;
  }
  report(7, ok, "histogram, excess, independence cap, degree-2 extension bound and "
                "foot disjointness hold on all 39 assemblies");
  REQUIRE(ok);
}

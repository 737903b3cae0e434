// Opt-in optimality proofs for the large toe counts: the values one below the
// table (19, 24, 26) must be infeasible over every instance. The original
// tooling needed hours for f = 15; run with:
//   ctest --test-dir build -R toe_oracle_slow  (after enabling)  or
//   ./tests/test_toe_oracle_slow "[.slow]"

#include <catch2/catch_amalgamated.hpp>

#include "lottery/toe_oracle.hpp"

using namespace lottery;

TEST_CASE("budget one below the table is infeasible for f = 13..15", "[.slow]") {
  for (int f : {13, 14, 15}) {
    int budget = min_excess(f) - 1;
    for (const auto& inst : instances_for(f)) {
      SolveOptions opts;
      opts.budget = budget;
      auto r = min_excess_for_instance(inst, opts);
      INFO("f=" << f << " parts=(" << inst.parts[0] << "," << inst.parts[1] << ","
                << inst.parts[2] << ") budget=" << budget);
      CHECK_FALSE(r.feasible);
    }
  }
}

TEST_CASE("witness-or-infeasibility at the table values for f = 13..15", "[.slow]") {
  for (int f : {13, 14, 15}) {
    bool witness = false;
    for (const auto& inst : instances_for(f)) {
      SolveOptions opts;
      opts.budget = min_excess(f);
      if (min_excess_for_instance(inst, opts).feasible) witness = true;
    }
    CHECK(witness);
  }
}

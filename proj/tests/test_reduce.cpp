#include <catch2/catch_amalgamated.hpp>

#include "lottery/pieces.hpp"
#include "lottery/reduce.hpp"
#include "lottery/verify.hpp"

using namespace lottery;

TEST_CASE("eliminate_degree_zero: identity on d0-free input") {
  auto D = assemble(config_for(33));
  auto E = eliminate_degree_zero(D, 6, 2);
  CHECK(E.blocks == D.blocks);
}

TEST_CASE("eliminate_degree_zero: rejects non-designs") {
  // pair (8,9) is uncovered, so this is not a (12,6,2,2) design
  auto D = make_design(12, 6, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 7}});
  CHECK_THROWS_AS(eliminate_degree_zero(D, 2, 2), PreconditionFailed);
}

TEST_CASE("eliminate_degree_zero: repairs a degree-0 vertex") {
  // valid (7,6,6,2;2) design with vertex 7 unused, j >= n/k
  auto D = make_design(7, 6, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}});
  REQUIRE(verify_exhaustive(D, 6, 2).valid);
  auto E = eliminate_degree_zero(D, 6, 2);
  auto deg = E.degrees();
  for (int v = 1; v <= 7; ++v) CHECK(deg[v] >= 1);
  CHECK(verify_exhaustive(E, 6, 2).valid);
}

TEST_CASE("eliminate_degree_zero: precondition j >= n/k") {
  auto D = make_design(13, 6, {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}});
  CHECK_THROWS_AS(eliminate_degree_zero(D, 6, 2), PreconditionFailed);
}

TEST_CASE("segregate: identity on already segregated designs") {
  for (int n : {32, 47, 59}) {
    auto D = assemble(config_for(n));
    auto S = segregate(D, 6, 2);
    CHECK(S.blocks == D.blocks);
  }
}

TEST_CASE("segregate: small synthetic k=3 design with a mixed block") {
  // (6,3,3,2;4): vertex 1 has degree 1 inside the non-isolated block {1,2,3}
  auto D = make_design(6, 3, {{1, 2, 3}, {3, 4, 5}, {4, 5, 6}, {2, 4, 6}});
  REQUIRE(verify_exhaustive(D, 3, 2).valid);
  REQUIRE_FALSE(is_segregated(D));
  auto S = segregate(D, 3, 2);
  CHECK(is_segregated(S));
  CHECK(verify_exhaustive(S, 3, 2).valid);
  CHECK(S.size() == D.size());
}

TEST_CASE("delete_vertex: degree-0 deletion is pure relabelling") {
  auto D = make_design(7, 6, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}});
  auto E = delete_vertex(D, 7, 6, 2);
  CHECK(E.n == 6);
  CHECK(E.blocks == make_design(6, 6, {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}}).blocks);
}

TEST_CASE("delete_vertex: table design for 33 witnesses L(32) <= 7") {
  auto D = assemble(config_for(33));
  auto E = delete_vertex(D, 33, 6, 2);
  CHECK(E.n == 32);
  CHECK(E.k == 6);
  CHECK(E.size() == 7);
  CHECK(verify_lottery(E, 6, 2, VerifyMethod::both).valid);
  // uniformity preserved no matter which vertex goes
  auto E2 = delete_vertex(D, 1, 6, 2);
  for (const auto& b : E2.blocks) CHECK(b.count() == 6);
}

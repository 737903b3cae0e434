#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "lottery/foot.hpp"
#include "lottery/pieces.hpp"
#include "lottery/shannon.hpp"
#include "lottery/verify.hpp"

using namespace lottery;

TEST_CASE("piece C is exactly one 6-Shannon subhypergraph") {
  auto C = make_design(9, 6, {{1, 2, 3, 4, 5, 6}, {4, 5, 6, 7, 8, 9}, {1, 2, 3, 7, 8, 9}});
  auto subs = find_shannon_subhypergraphs(C);
  REQUIRE(subs.size() == 1);
  CHECK(subs[0].vertices.count() == 9);
}

TEST_CASE("piece E and piece F contain no Shannon subhypergraph") {
  auto E = make_design(14, 6, piece_blocks(PieceKind::E, 0));
  CHECK(find_shannon_subhypergraphs(E).empty());
  // F has the (3,3,3)-intersection shape but every vertex has degree 3
  auto F = make_design(12, 6, piece_blocks(PieceKind::F, 0));
  CHECK(find_shannon_subhypergraphs(F).empty());
}

TEST_CASE("single isolated block has no Shannon subhypergraph") {
  auto A = make_design(6, 6, {{1, 2, 3, 4, 5, 6}});
  CHECK(find_shannon_subhypergraphs(A).empty());
}

TEST_CASE("assembled designs have one Shannon subhypergraph per C piece") {
  for (int n : {39, 45, 47, 55, 59}) {
    auto cfg = config_for(n);
    auto D = assemble(cfg);
    long c_pieces = std::count(cfg.begin(), cfg.end(), PieceKind::C);
    CHECK(static_cast<long>(find_shannon_subhypergraphs(D).size()) == c_pieces);
  }
}

TEST_CASE("toes: disjoint A blocks leave an empty foot") {
  auto AA = make_design(12, 6, {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}});
  auto rep = toes_and_foot(AA, {1, 7});
  CHECK(rep.foot.none());
  CHECK(rep.tau == std::vector<int>{0, 0});
}

TEST_CASE("toes in piece C from a single member") {
  // vertices 2,3 lie in both 1-blocks, so F_1 = {4..9}
  auto C = make_design(9, 6, piece_blocks(PieceKind::C, 0));
  auto rep = toes_and_foot(C, {1});
  REQUIRE(rep.members == std::vector<int>{1});
  CHECK(rep.tau[0] == 6);
  for (int v : {4, 5, 6, 7, 8, 9}) CHECK(rep.toes[0].test(v));
  for (int v : {2, 3}) CHECK_FALSE(rep.toes[0].test(v));
}

TEST_CASE("vertices in two I-blocks are never toes") {
  // x=1 and y=12 independent; vertex 7 sits in one block of each
  auto D = make_design(12, 6,
                       {{1, 2, 3, 4, 5, 7}, {1, 2, 3, 4, 5, 6}, {6, 7, 8, 9, 10, 12},
                        {8, 9, 10, 11, 12, 2}});
  auto rep = toes_and_foot(D, {1, 12});
  for (std::size_t i = 0; i < rep.members.size(); ++i) CHECK_FALSE(rep.toes[i].test(7));
}

TEST_CASE("foot disjointness on assembled designs") {
  for (int n : {45, 59, 70}) {
    auto D = assemble(config_for(n));
    auto I = max_independent_set(D, 5);
    auto rep = toes_and_foot(D, I);
    int total = 0;
    for (int t : rep.tau) total += t;
    CHECK(total == rep.foot.count());
  }
}

TEST_CASE("not independent is rejected") {
  auto C = make_design(9, 6, piece_blocks(PieceKind::C, 0));
  CHECK_THROWS_AS(toes_and_foot(C, {1, 2}), NotIndependent);
}

TEST_CASE("webbings collect blocks outside B_I with two toes") {
  // I = {1}: blocks of 1 cover toes {4,5}; block {4,5,10,11,12,13} is a webbing
  auto D = make_design(13, 6,
                       {{1, 2, 3, 4, 6, 7}, {1, 2, 3, 5, 8, 9}, {4, 5, 10, 11, 12, 13},
                        {6, 7, 8, 9, 10, 11}});
  auto rep = toes_and_foot(D, {1});
  REQUIRE(rep.members == std::vector<int>{1});
  CHECK(rep.toes[0].test(4));
  CHECK(rep.toes[0].test(5));
  REQUIRE(rep.webbings[0].size() >= 1);
  bool found = false;
  for (int bi : rep.webbings[0])
    if (D.blocks[bi].test(4) && D.blocks[bi].test(5)) found = true;
  CHECK(found);
}

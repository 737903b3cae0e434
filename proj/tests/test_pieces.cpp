#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lottery/covering.hpp"
#include "lottery/pieces.hpp"
#include "lottery/shannon.hpp"
#include "lottery/ticket_io.hpp"
#include "lottery/verify.hpp"

using namespace lottery;

namespace {

// the published 27 tickets for n = 59 under identity labelling
const char* kTable59 =
    "1 2 3 4 5 6\n"
    "1 2 3 4 7 8\n"
    "1 2 5 6 7 8\n"
    "9 10 11 12 13 14\n"
    "9 10 11 15 16 17\n"
    "12 13 14 15 16 17\n"
    "18 19 20 21 26 27\n"
    "18 19 22 23 30 31\n"
    "18 19 24 25 28 29\n"
    "20 21 22 23 28 29\n"
    "20 21 24 25 30 31\n"
    "22 23 24 25 26 27\n"
    "26 27 28 29 30 31\n"
    "32 33 34 35 40 41\n"
    "32 33 36 37 44 45\n"
    "32 33 38 39 42 43\n"
    "34 35 36 37 42 43\n"
    "34 35 38 39 44 45\n"
    "36 37 38 39 40 41\n"
    "40 41 42 43 44 45\n"
    "46 47 48 49 54 55\n"
    "46 47 50 51 58 59\n"
    "46 47 52 53 56 57\n"
    "48 49 50 51 56 57\n"
    "48 49 52 53 58 59\n"
    "50 51 52 53 54 55\n"
    "54 55 56 57 58 59\n";

}  // namespace

TEST_CASE("piece metadata") {
  CHECK(piece_info(PieceKind::A).order == 6);
  CHECK(piece_info(PieceKind::E).order == 14);
  CHECK(piece_info(PieceKind::E).size == 7);
  CHECK(piece_info(PieceKind::G).order == 13);
  CHECK(piece_info(PieceKind::G).size == 7);
}

TEST_CASE("piece blocks literal data") {
  auto a = piece_blocks(PieceKind::A, 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == std::vector<int>{1, 2, 3, 4, 5, 6});

  auto e = piece_blocks(PieceKind::E, 0);
  REQUIRE(e.size() == 7);
  CHECK(e[0] == std::vector<int>{1, 2, 3, 4, 9, 10});

  auto g = piece_blocks(PieceKind::G, 0);
  CHECK(std::find(g.begin(), g.end(), std::vector<int>{1, 2, 3, 5, 6, 13}) != g.end());
  CHECK(std::find(g.begin(), g.end(), std::vector<int>{1, 3, 4, 7, 8, 13}) != g.end());
  CHECK(std::find(g.begin(), g.end(), std::vector<int>{1, 9, 10, 11, 12, 13}) != g.end());
}

TEST_CASE("every piece is a covering design on its own vertex set") {
  for (PieceKind p : {PieceKind::A, PieceKind::B, PieceKind::C, PieceKind::D,
                      PieceKind::E, PieceKind::F, PieceKind::G}) {
    auto info = piece_info(p);
    auto D = make_design(info.order, 6, piece_blocks(p, 0));
    CHECK(D.size() == info.size);
    auto pc = pair_coverage(D);
    for (int x = 1; x <= D.n; ++x)
      for (int y = x + 1; y <= D.n; ++y) CHECK(pc.covered(x, y));
    // piece sizes agree with the covering number table at their orders
    CHECK(info.size == covering_upper(info.order));
  }
}

TEST_CASE("config table rows are internally consistent") {
  for (const auto& row : kConfigTable) {
    auto cfg = config_for(row.n);
    int order = 0, size = 0;
    for (auto p : cfg) {
      order += piece_info(p).order;
      size += piece_info(p).size;
    }
    CHECK(order == row.n);
    CHECK(size == row.L);
  }
  CHECK(config_string(config_for(59)) == "BCEEE");
  CHECK(config_string(config_for(70)) == "EEEEE");
  CHECK(config_string(config_for(67)) == "EEEFG");
  CHECK_THROWS_AS(config_for(31), OutOfRange);
  CHECK_THROWS_AS(config_for(71), OutOfRange);
}

TEST_CASE("assembly for n=59 reproduces the published tickets byte for byte") {
  auto D = assemble(config_for(59));
  CHECK(design_to_string(D) == kTable59);
}

TEST_CASE("assembly basics") {
  auto A = assemble({PieceKind::A});
  CHECK(A.n == 6);
  CHECK(A.size() == 1);
  auto AA = assemble({PieceKind::A, PieceKind::A});
  CHECK(AA.n == 12);
  CHECK(AA.size() == 2);
  CHECK_FALSE(AA.blocks[0].intersects(AA.blocks[1]));
}

TEST_CASE("assemblies are segregated with one isolated block per A piece") {
  for (int n : {32, 38, 47, 54, 59, 70}) {
    auto cfg = config_for(n);
    auto D = assemble(cfg);
    CHECK(is_segregated(D));
    long a_pieces = std::count(cfg.begin(), cfg.end(), PieceKind::A);
    CHECK(static_cast<long>(isolated_block_indices(D).size()) == a_pieces);
  }
}

TEST_CASE("relabelled assembly stays valid") {
  auto D = assemble(config_for(59));
  std::vector<int> perm(59);
  std::iota(perm.begin(), perm.end(), 1);
  std::reverse(perm.begin(), perm.end());
  auto R = relabel(D, perm);
  CHECK(verify_lottery(R, 6, 2, VerifyMethod::clique).valid);
  std::vector<int> bad(59, 1);
  CHECK_THROWS_AS(relabel(D, bad), PreconditionFailed);
}

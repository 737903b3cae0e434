#pragma once

#include <string>
#include <vector>

#include "lottery/design.hpp"
#include "lottery/errors.hpp"

namespace lottery {

// The seven ticket configurations. Orders (vertex counts) and sizes (block
// counts): A=(6,1) B=(8,3) C=(9,3) D=(10,4) E=(14,7) F=(12,6) G=(13,7).
// E is the doubled Fano plane; G is E with every 14 replaced by the smallest
// label in 1..13 absent from that block.
enum class PieceKind { A, B, C, D, E, F, G };

struct PieceInfo {
  int order;
  int size;
};

inline PieceInfo piece_info(PieceKind p) {
  switch (p) {
    case PieceKind::A: return {6, 1};
    case PieceKind::B: return {8, 3};
    case PieceKind::C: return {9, 3};
    case PieceKind::D: return {10, 4};
    case PieceKind::E: return {14, 7};
    case PieceKind::F: return {12, 6};
    case PieceKind::G: return {13, 7};
  }
  throw OutOfRange("unknown piece");
}

inline char piece_label(PieceKind p) { return "ABCDEFG"[static_cast<int>(p)]; }

inline PieceKind piece_from_label(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') throw OutOfRange(std::string("unknown piece '") + c + "'");
  return static_cast<PieceKind>(c - 'A');
}

inline std::vector<std::vector<int>> piece_blocks(PieceKind p, int offset) {
  std::vector<std::vector<int>> raw;
  switch (p) {
    case PieceKind::A:
      raw = {{1, 2, 3, 4, 5, 6}};
      break;
    case PieceKind::B:
      raw = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 7, 8}, {1, 2, 5, 6, 7, 8}};
      break;
    case PieceKind::C:
      raw = {{1, 2, 3, 4, 5, 6}, {1, 2, 3, 7, 8, 9}, {4, 5, 6, 7, 8, 9}};
      break;
    case PieceKind::D:
      raw = {{1, 2, 3, 4, 9, 10},
             {1, 2, 5, 6, 9, 10},
             {1, 2, 7, 8, 9, 10},
             {3, 4, 5, 6, 7, 8}};
      break;
    case PieceKind::E:
      raw = {{1, 2, 3, 4, 9, 10},  {1, 2, 5, 6, 13, 14}, {1, 2, 7, 8, 11, 12},
             {3, 4, 5, 6, 11, 12}, {3, 4, 7, 8, 13, 14}, {5, 6, 7, 8, 9, 10},
             {9, 10, 11, 12, 13, 14}};
      break;
    case PieceKind::F:
      raw = {{1, 2, 3, 4, 5, 6},    {1, 2, 3, 7, 8, 9},    {1, 2, 3, 10, 11, 12},
             {4, 5, 6, 7, 8, 9},    {4, 5, 6, 10, 11, 12}, {7, 8, 9, 10, 11, 12}};
      break;
    case PieceKind::G: {
      raw = piece_blocks(PieceKind::E, 0);
      for (auto& b : raw) {
        bool had14 = false;
        for (int& v : b)
          if (v == 14) had14 = true;
        if (!had14) continue;
        std::vector<bool> present(14, false);
        for (int v : b)
          if (v <= 13) present[v] = true;
        int repl = 0;
        for (int v = 1; v <= 13; ++v)
          if (!present[v]) {
            repl = v;
            break;
          }
        for (int& v : b)
          if (v == 14) v = repl;
        std::sort(b.begin(), b.end());
      }
      break;
    }
  }
  for (auto& b : raw)
    for (int& v : b) v += offset;
  return raw;
}

// Table of L(n,6,6,2) with one witness configuration per n. Two rows of the
// published table do not sum to their own n (50 and 51); the configurations
// here are corrected so that orders total n and sizes total L.
struct ConfigRow {
  int n;
  int L;
  const char* cfg;
};

inline constexpr ConfigRow kConfigTable[] = {
    {32, 7, "AAAAB"},  {33, 7, "AAAAC"},  {34, 8, "AAAAD"},  {35, 9, "AAABC"},
    {36, 9, "AAACC"},  {37, 10, "AAACD"}, {38, 11, "AAAAE"}, {39, 11, "AACCC"},
    {40, 12, "AACCD"}, {41, 13, "AAACE"}, {42, 13, "ACCCC"}, {43, 14, "ACCCD"},
    {44, 15, "AACCE"}, {45, 15, "CCCCC"}, {46, 16, "CCCCD"}, {47, 17, "ACCCE"},
    {48, 18, "ACCDE"}, {49, 19, "AACEE"}, {50, 19, "CCCCE"}, {51, 20, "CCCDE"},
    {52, 21, "ACCEE"}, {53, 22, "ACDEE"}, {54, 23, "AAEEE"}, {55, 23, "CCCEE"},
    {56, 24, "CCDEE"}, {57, 25, "ACEEE"}, {58, 26, "ADEEE"}, {59, 27, "BCEEE"},
    {60, 27, "CCEEE"}, {61, 28, "CDEEE"}, {62, 29, "DDEEE"}, {63, 30, "CEEEF"},
    {64, 31, "DEEEF"}, {65, 31, "CEEEE"}, {66, 32, "DEEEE"}, {67, 34, "EEEFG"},
    {68, 34, "EEEEF"}, {69, 35, "EEEEG"}, {70, 35, "EEEEE"},
};

inline int table_value(int n) {
  for (const auto& row : kConfigTable)
    if (row.n == n) return row.L;
  throw OutOfRange("table covers 32..70, got n=" + std::to_string(n));
}

inline std::vector<PieceKind> config_for(int n) {
  for (const auto& row : kConfigTable)
    if (row.n == n) {
      std::vector<PieceKind> cfg;
      for (const char* c = row.cfg; *c; ++c) cfg.push_back(piece_from_label(*c));
      return cfg;
    }
  throw OutOfRange("table covers 32..70, got n=" + std::to_string(n));
}

inline std::string config_string(const std::vector<PieceKind>& cfg) {
  std::string s;
  for (auto p : cfg) s += piece_label(p);
  return s;
}

// Disjoint union of the pieces, laid out left to right with cumulative
// offsets.
inline Design assemble(const std::vector<PieceKind>& cfg) {
  std::vector<std::vector<int>> blocks;
  int offset = 0;
  for (PieceKind p : cfg) {
    auto pb = piece_blocks(p, offset);
    blocks.insert(blocks.end(), pb.begin(), pb.end());
    offset += piece_info(p).order;
  }
  return make_design(offset, 6, blocks);
}

// Relabelling by a permutation of 1..n (the paper's "in any order").
inline Design relabel(const Design& D, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != D.n)
    throw PreconditionFailed("relabel: permutation must list n labels");
  std::vector<bool> seen(D.n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > D.n || seen[v])
      throw PreconditionFailed("relabel: not a permutation of 1..n");
    seen[v] = true;
  }
  Design out;
  out.n = D.n;
  out.k = D.k;
  for (const auto& b : D.blocks) {
    Block128 nb;
    b.for_each([&](int v) { nb.set(perm[v - 1]); });
    out.blocks.push_back(nb);
  }
  out.canonicalize();
  return out;
}

}  // namespace lottery

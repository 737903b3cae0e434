#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "lottery/design.hpp"
#include "lottery/errors.hpp"

namespace lottery {

// Toes, foot and webbings of an independent set. Members are listed in
// delta order (degree, then label). An x-toe is a degree->=2 vertex adjacent
// to x lying in exactly one block of B_I; an x-webbing is a block outside
// B_I holding two or more distinct x-toes.
struct FootReport {
  std::vector<int> members;                 // I in delta order
  std::vector<Block128> toes;               // F_x per member
  std::vector<int> tau;                     // |F_x| per member
  Block128 foot;                            // F_I
  std::vector<std::vector<int>> webbings;   // block indices per member
};

inline FootReport toes_and_foot(const Design& D, const std::vector<int>& I) {
  auto deg = D.degrees();
  for (int x : I) {
    if (x < 1 || x > D.n) throw VertexOutOfRange("member outside 1..n");
    if (deg[x] < 1) throw PreconditionFailed("member of degree 0 in I");
  }
  auto pc = pair_coverage(D);
  for (std::size_t i = 0; i < I.size(); ++i)
    for (std::size_t j = i + 1; j < I.size(); ++j)
      if (pc.covered(I[i], I[j])) throw NotIndependent("members share a block");

  FootReport rep;
  rep.members = I;
  std::sort(rep.members.begin(), rep.members.end(), [&](int a, int b) {
    return deg[a] != deg[b] ? deg[a] < deg[b] : a < b;
  });

  Block128 iset = Block128::from_vertices(rep.members);
  std::vector<int> bi_blocks;  // indices of B_I
  std::vector<int> owner;      // the unique member in each B_I block
  for (int i = 0; i < D.size(); ++i) {
    Block128 m = D.blocks[i] & iset;
    if (m.none()) continue;
    bi_blocks.push_back(i);
    owner.push_back(m.lowest());
  }

  // B_I-multiplicity per vertex
  std::vector<int> mult(D.n + 1, 0);
  for (int bi : bi_blocks)
    D.blocks[bi].for_each([&](int v) { ++mult[v]; });

  rep.toes.assign(rep.members.size(), Block128{});
  rep.tau.assign(rep.members.size(), 0);
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < rep.members.size(); ++i) pos[rep.members[i]] = i;

  for (std::size_t bb = 0; bb < bi_blocks.size(); ++bb) {
    std::size_t at = pos[owner[bb]];
    D.blocks[bi_blocks[bb]].for_each([&](int v) {
      if (iset.test(v)) return;
      if (deg[v] >= 2 && mult[v] == 1) rep.toes[at].set(v);
    });
  }
  for (std::size_t i = 0; i < rep.members.size(); ++i) {
    rep.tau[i] = rep.toes[i].count();
    if ((rep.foot & rep.toes[i]).any()) throw Error("toe sets not disjoint");
    rep.foot |= rep.toes[i];
  }

  Block128 in_bi;
  for (int bi : bi_blocks) in_bi.set(bi + 1);  // 1-based marker over block indices
  rep.webbings.assign(rep.members.size(), {});
  for (int i = 0; i < D.size(); ++i) {
    if (in_bi.test(i + 1)) continue;
    for (std::size_t m = 0; m < rep.members.size(); ++m)
      if (D.blocks[i].intersection_size(rep.toes[m]) >= 2) rep.webbings[m].push_back(i);
  }
  return rep;
}

}  // namespace lottery

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lottery/design.hpp"
#include "lottery/errors.hpp"

namespace lottery {

// Ticket file format: UTF-8 text, one block per line, k integers in 1..n in
// ascending order separated by single spaces. Lines starting '#' are
// comments, blank lines are ignored.

inline std::vector<std::vector<int>> parse_tickets(std::istream& in, int n) {
  std::vector<std::vector<int>> blocks;
  std::string line;
  int k = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<int> vs;
    long x;
    while (ls >> x) vs.push_back(static_cast<int>(x));
    if (!ls.eof()) {
      ls.clear();
      std::string tail;
      ls >> tail;
      if (!tail.empty())
        throw ParseError("line " + std::to_string(lineno) + ": bad token '" + tail + "'");
    }
    if (vs.empty()) continue;
    if (k < 0) k = static_cast<int>(vs.size());
    if (static_cast<int>(vs.size()) != k)
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(k) + " numbers, got " + std::to_string(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] < 1 || vs[i] > n)
        throw ParseError("line " + std::to_string(lineno) + ": label " +
                         std::to_string(vs[i]) + " outside 1.." + std::to_string(n));
      if (i > 0 && vs[i] <= vs[i - 1])
        throw ParseError("line " + std::to_string(lineno) + ": labels must be ascending");
    }
    blocks.push_back(vs);
  }
  if (blocks.empty()) throw ParseError("no ticket lines found");
  return blocks;
}

inline Design read_design(std::istream& in, int n) {
  auto blocks = parse_tickets(in, n);
  return make_design(n, static_cast<int>(blocks[0].size()), blocks);
}

inline void write_design(std::ostream& out, const Design& D) {
  for (const auto& b : D.blocks) {
    auto vs = b.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out << ' ';
      out << vs[i];
    }
    out << '\n';
  }
}

inline std::string design_to_string(const Design& D) {
  std::ostringstream os;
  write_design(os, D);
  return os.str();
}

// FNV-1a 64-bit, used to fingerprint emitted ticket files in certificates.
inline std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace lottery

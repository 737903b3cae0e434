// Command-line front end: bound certification runs, ticket generation,
// verification, toe-table builds and cache management.
//
// Exit codes: 0 success (bounds: all proved), 1 I/O or internal failure,
// 2 conjectured entries present, 3 ticket verification failure, 64 usage
// error, 65 ticket parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lottery/covering.hpp"
#include "lottery/furedi.hpp"
#include "lottery/pieces.hpp"
#include "lottery/pipeline.hpp"
#include "lottery/ticket_io.hpp"
#include "lottery/toe_oracle.hpp"
#include "lottery/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConjectured = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;

int resolve_threads(int t) {
  if (t > 0) return t;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string default_cache_path() {
  if (const char* dir = std::getenv("LOTTERY_CACHE_DIR"))
    return std::string(dir) + "/toe_cache.json";
  return {};
}

int cmd_bounds(int nmin, int nmax, bool json, int threads) {
  if (nmin < 6 || nmax > 200 || nmin > nmax) {
    std::cerr << "bounds: range must satisfy 6 <= min <= max <= 200\n";
    return kExitUsage;
  }
  bool any_conjectured = false;
  nlohmann::json jout = nlohmann::json::array();
  int carry = 1;
  for (int n = nmin; n <= nmax; ++n) {
    if (n > lottery::kCoverMax * 5) {
      // beyond the reach of five table parts: lower bound only
      any_conjectured = true;
      long fl = lottery::furedi_lower(n, 6, 6);
      if (json) {
        nlohmann::json n5;
        n5["n"] = n;
        n5["L"] = fl;
        n5["status"] = "conjectured";
        n5["note"] = "no covering-partition upper bound within five parts";
        jout.push_back(n5);
      } else {
        std::cout << n << "  >=" << fl << "  -      conjectured\n";
      }
      continue;
    }
    auto cert = lottery::certify(n, carry, threads);
    carry = cert.L;
    if (cert.status != "proved") any_conjectured = true;
    if (json) {
      jout.push_back(lottery::certificate_json(cert));
    } else {
      std::cout << cert.n << "  " << cert.L << "  "
                << (cert.config.empty() ? std::string("-") : cert.config) << "  "
                << cert.status << "\n";
    }
  }
  if (json) std::cout << jout.dump(2) << "\n";
  return any_conjectured ? kExitConjectured : kExitOk;
}

int cmd_tickets(int n, const std::string& config, const std::string& labels_path,
                const std::string& out_path, int threads) {
  std::vector<lottery::PieceKind> cfg;
  if (!config.empty()) {
    for (char c : config) {
      if (c == ',' || c == ' ') continue;
      cfg.push_back(lottery::piece_from_label(c));
    }
  } else {
    cfg = lottery::config_for(n);  // throws OutOfRange outside 32..70
  }
  lottery::Design D = lottery::assemble(cfg);
  if (!config.empty() && n > 0 && D.n != n)
    throw lottery::PreconditionFailed("config covers " + std::to_string(D.n) +
                                      " vertices, not n=" + std::to_string(n));
  if (!labels_path.empty()) {
    std::ifstream in(labels_path);
    if (!in) {
      std::cerr << "tickets: cannot open labels file " << labels_path << "\n";
      return kExitIo;
    }
    std::vector<int> perm;
    int x;
    while (in >> x) perm.push_back(x);
    D = lottery::relabel(D, perm);
  }
  if (!lottery::verify_lottery(D, 6, 2, lottery::VerifyMethod::both, threads).valid) {
    std::cerr << "tickets: assembled design failed verification\n";
    return kExitVerifyFailed;
  }
  std::string text = lottery::design_to_string(D);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "tickets: cannot write " << out_path << "\n";
      return kExitIo;
    }
    out << text;
  }
  std::cerr << "j=" << D.size() << "\n";
  return kExitOk;
}

int cmd_verify(int n, const std::string& path, const std::string& method, int p, int t,
               int threads) {
  lottery::VerifyMethod m;
  if (method == "exhaustive")
    m = lottery::VerifyMethod::exhaustive;
  else if (method == "clique")
    m = lottery::VerifyMethod::clique;
  else if (method == "both")
    m = lottery::VerifyMethod::both;
  else {
    std::cerr << "verify: unknown method " << method << "\n";
    return kExitUsage;
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "verify: cannot open " << path << "\n";
    return kExitIo;
  }
  lottery::Design D;
  try {
    D = lottery::read_design(in, n);
    if (D.k != 6)
      throw lottery::ParseError("tickets must have 6 numbers, got " +
                                std::to_string(D.k));
  } catch (const lottery::ParseError& e) {
    std::cerr << "verify: parse error: " << e.what() << "\n";
    return kExitParse;
  }
  auto v = lottery::verify_lottery(D, p, t, m, threads);
  if (v.valid) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << "invalid witness";
  for (int x : v.witness) std::cout << ' ' << x;
  std::cout << "\n";
  return kExitOk;
}

int cmd_toe_table(int maxF, std::string cache, bool prove_optimal) {
  if (maxF < 0 || maxF > 15) {
    std::cerr << "toe-table: --max-f must lie in 0..15\n";
    return kExitUsage;
  }
  if (cache.empty()) cache = default_cache_path();
  lottery::ToeExcessTable table;
  bool loaded = false;
  if (!cache.empty()) {
    std::ifstream probe(cache);
    if (probe.good()) {
      table = lottery::cache_load(cache);
      loaded = true;
      for (int f = 0; f <= maxF; ++f)
        if (!table.entries.count(f)) {
          loaded = false;  // incomplete for the request: rebuild
          break;
        }
    }
  }
  if (!loaded || prove_optimal) {
    table = lottery::build_toe_table(maxF, prove_optimal);
    if (!cache.empty()) lottery::cache_store(table, cache);
  }
  std::cout << "f  min-excess  optimality  provenance\n";
  for (int f = 0; f <= maxF; ++f) {
    const auto& e = table.entries.at(f);
    std::cout << f << "  " << e.value << "  "
              << (e.optimality == lottery::Optimality::proved ? "proved" : "witness-only")
              << (e.optimality_verified ? "" : " (unverified)") << "  "
              << table.provenance << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and certifier for minimal lottery designs L(n,6,6,2)"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = available parallelism)");

  auto* bounds = app.add_subcommand("bounds", "certify lottery numbers over a range");
  int nmin = 32, nmax = 70;
  bool json = false;
  bounds->add_option("--min", nmin, "smallest n")->required();
  bounds->add_option("--max", nmax, "largest n")->required();
  bounds->add_flag("--json", json, "emit JSON certificates");

  auto* tickets = app.add_subcommand("tickets", "emit a minimal ticket set");
  int tn = 0;
  std::string config, labels, out_path;
  tickets->add_option("--n", tn, "number of balls (32..70)");
  tickets->add_option("--config", config, "explicit piece string, e.g. BCEEE");
  tickets->add_option("--labels", labels, "permutation file relabelling 1..n");
  tickets->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "verify a ticket file");
  int vn = 0, vp = 6, vt = 2;
  std::string vfile, method = "both";
  verify->add_option("--n", vn, "number of balls")->required();
  verify->add_option("--file", vfile, "ticket file")->required();
  verify->add_option("--method", method, "exhaustive | clique | both");
  verify->add_option("--p", vp, "draw size (default 6)");
  verify->add_option("--t", vt, "match threshold (default 2)");

  auto* toe = app.add_subcommand("toe-table", "build or load the minimal-excess table");
  int maxf = 15;
  std::string cache;
  bool prove = false;
  toe->add_option("--max-f", maxf, "largest toe count (<= 15)");
  toe->add_option("--cache", cache, "cache file path");
  toe->add_flag("--prove-optimal", prove, "run the slow optimality proofs for f >= 13");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(nmin, nmax, json, resolve_threads(threads));
    if (tickets->parsed()) {
      if (tn == 0 && config.empty()) {
        std::cerr << "tickets: need --n or --config\n";
        return kExitUsage;
      }
      return cmd_tickets(tn, config, labels, out_path, resolve_threads(threads));
    }
    if (verify->parsed())
      return cmd_verify(vn, vfile, method, vp, vt, resolve_threads(threads));
    if (toe->parsed()) return cmd_toe_table(maxf, cache, prove);
  } catch (const lottery::OutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lottery::CorruptCache& e) {
    std::cerr << "corrupt cache: " << e.what() << "\n";
    return kExitIo;
  } catch (const lottery::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

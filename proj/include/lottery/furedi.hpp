#pragma once

#include <limits>
#include <vector>

#include "lottery/errors.hpp"

namespace lottery {

// Furedi--Szekely--Zubor lower bound:
//   L(n,k,p,2) >= ceil( (1/k) min_{a_1+..+a_{p-1}=n, a_i>=0} sum a_i ceil((a_i-1)/(k-1)) ).
// Zero parts contribute nothing, so the minimum ranges over at most p-1
// nonzero parts; the ceiling is applied after the global minimum.
inline long furedi_min_sum(int n, int k, int p) {
  if (n < 0) throw PreconditionFailed("furedi: n must be >= 0");
  if (k < 2 || p < 2) throw PreconditionFailed("furedi: need k >= 2, p >= 2");
  const long INF = std::numeric_limits<long>::max() / 4;
  auto g = [&](long a) -> long {
    if (a <= 1) return 0;
    return a * ((a - 1 + k - 2) / (k - 1));
  };
  int parts = p - 1;
  std::vector<long> dp(n + 1, INF), next(n + 1, INF);
  dp[n] = 0;  // dp[r] = min cost with r still to distribute
  for (int m = 0; m < parts; ++m) {
    std::fill(next.begin(), next.end(), INF);
    for (int r = 0; r <= n; ++r) {
      if (dp[r] == INF) continue;
      for (int a = 0; a <= r; ++a) {
        long c = dp[r] + g(a);
        if (c < next[r - a]) next[r - a] = c;
      }
    }
    dp.swap(next);
  }
  if (dp[0] == INF) throw Infeasible("furedi: no composition found");
  return dp[0];
}

inline long furedi_lower(int n, int k, int p) {
  if (n == 0) return 0;
  long m = furedi_min_sum(n, k, p);
  return (m + k - 1) / k;
}

}  // namespace lottery

// Copyright 2026 The honeycomb-qec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HONEYCOMB_TESTS_ORACLES_SMALL_HPP
#define HONEYCOMB_TESTS_ORACLES_SMALL_HPP

// Exhaustive oracles: perfect matchings, Wick pairings, GF(2) span membership
// and the one-dimensional tight-binding propagator.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

// Minimum total cost over all (m-1)!! perfect matchings.
inline std::int64_t brute_force_matching(const std::vector<std::vector<std::int64_t>>& cost) {
  const int m = static_cast<int>(cost.size());
  std::vector<bool> used(m, false);
  std::function<std::int64_t(int)> rec = [&](int i) -> std::int64_t {
    while (i < m && used[i]) ++i;
    if (i == m) return 0;
    used[i] = true;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int j = i + 1; j < m; ++j)
      if (!used[j]) {
        used[j] = true;
        best = std::min(best, cost[i][j] + rec(i + 1));
        used[j] = false;
      }
    used[i] = false;
    return best;
  };
  return rec(0);
}

// Sum over all pairings of prod g(a, b) (a < b in each pair) times the sign of
// the permutation (a1 b1 a2 b2 ...), the sign taken from its inversion count.
inline std::complex<double> brute_force_pairings(const std::vector<std::vector<std::complex<double>>>& g) {
  const int m = static_cast<int>(g.size());
  std::vector<int> perm;
  std::vector<bool> used(m, false);
  std::complex<double> total = 0.0;
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < m && used[i]) ++i;
    if (i == m) {
      int inv = 0;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) inv += perm[a] > perm[b];
      std::complex<double> prod = 1.0;
      for (int k = 0; k < m; k += 2) prod *= g[perm[k]][perm[k + 1]];
      total += (inv % 2 ? -1.0 : 1.0) * prod;
      return;
    }
    used[i] = true;
    perm.push_back(i);
    for (int j = i + 1; j < m; ++j)
      if (!used[j]) {
        used[j] = true;
        perm.push_back(j);
        rec();
        perm.pop_back();
        used[j] = false;
      }
    perm.pop_back();
    used[i] = false;
  };
  rec();
  return total;
}

// Bit vectors as word arrays; true when v lies in the span of rows.
inline bool in_gf2_span(std::vector<std::vector<std::uint64_t>> rows, std::vector<std::uint64_t> v) {
  const std::size_t words = v.size();
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<std::uint64_t>& x) {
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((x[pivots[k] >> 6] >> (pivots[k] & 63)) & 1U)
        for (std::size_t w = 0; w < words; ++w) x[w] ^= basis[k][w];
  };
  for (auto& r : rows) {
    reduce(r);
    for (std::size_t b = 0; b < 64 * words; ++b)
      if ((r[b >> 6] >> (b & 63)) & 1U) {
        // Keep earlier basis vectors free of the new pivot.
        for (auto& e : basis)
          if ((e[b >> 6] >> (b & 63)) & 1U)
            for (std::size_t w = 0; w < words; ++w) e[w] ^= r[w];
        basis.push_back(r);
        pivots.push_back(b);
        break;
      }
  }
  reduce(v);
  for (auto w : v)
    if (w) return false;
  return true;
}

// <m| e^{-iHt} |0> for H = -t_hop sum (|j+1><j| + h.c.) on a ring of length
// n, summing periodic images of i^m J_m(2 t_hop t).
inline std::complex<double> ring_propagator(int m, int n, double t_hop, double t) {
  std::complex<double> s = 0.0;
  const std::complex<double> ipow[4] = {1.0, {0, 1}, -1.0, {0, -1}};
  for (int img = -40; img <= 40; ++img) {
    const int j = m + img * n;
    const double bj = std::cyl_bessel_j(static_cast<double>(std::abs(j)), 2 * t_hop * t);
    // J_{-k} = (-1)^k J_k and i^{-k} = (-i)^k cancel into i^{|k|}.
    s += ipow[std::abs(j) % 4] * bj;
  }
  return s;
}

}  // namespace oracle

#endif  // HONEYCOMB_TESTS_ORACLES_SMALL_HPP

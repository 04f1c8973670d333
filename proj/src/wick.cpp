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

#include "honeycomb/wick.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "honeycomb/bounds.hpp"
#include "honeycomb/syndrome.hpp"

namespace honeycomb {

namespace {

constexpr int kMaxPairs = 8;

// Pfaffian-style expansion of the first remaining index, skipping exact
// zeros so that s-filtered pairings cost M! rather than (2M-1)!!.
std::complex<double> pairing_sum(const std::vector<std::complex<double>>& g, int size,
                                 std::vector<int>& rest) {
  if (rest.empty()) return 1.0;
  const int first = rest[0];
  std::complex<double> total = 0.0;
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const std::complex<double> gij = g[static_cast<std::size_t>(first) * size + rest[j]];
    if (gij == 0.0) continue;
    std::vector<int> sub;
    sub.reserve(rest.size() - 2);
    for (std::size_t k = 1; k < rest.size(); ++k)
      if (k != j) sub.push_back(rest[k]);
    const double sign = (j - 1) % 2 == 0 ? 1.0 : -1.0;
    total += sign * gij * pairing_sum(g, size, sub);
  }
  return total;
}

}  // namespace

std::vector<Endpoint> endpoints(const LinkOperator& op) {
  std::map<PlanarQubit, int> incidence;
  for (const auto& g : op.generators)
    for (const auto& v : link_qubits(g)) incidence[v] ^= 1;
  std::vector<Endpoint> out;
  for (const auto& [v, odd] : incidence)
    if (odd) out.push_back({v.qx, v.qy, v.leg == Leg::lower ? 1 : -1});
  std::sort(out.begin(), out.end());
  return out;
}

std::complex<double> pair_correlator(const Couplings& c, int n, SectorLabel l, const Endpoint& ei,
                                     const Endpoint& ej, MixedSign sign) {
  const int dx = ei.qx - ej.qx;
  const int dy = ei.qy - ej.qy;
  const double pi = std::numbers::pi;
  const double shift_x = (l.lx + 1) / 2 * pi / n;
  const double shift_y = (l.ly + 1) / 2 * pi / n;
  const double xi_sign = (sign == MixedSign::plus_first ? 1.0 : -1.0) * ei.s;
  const bool constant = ei.s == ej.s || (c.jx == 0.0 && c.jy == 0.0);
  if (constant) {
    // A DFT of a constant: evaluate it exactly so vanishing pairings and
    // the decoupled limit carry no roundoff.
    if (((dx % n) + n) % n != 0 || ((dy % n) + n) % n != 0) return 0.0;
    const double h = ei.s == ej.s ? static_cast<double>(ei.s) : xi_sign;
    return h * std::polar(1.0, shift_x * dx + shift_y * dy);
  }
  std::complex<double> acc = 0.0;
  for (int my = 0; my < n; ++my) {
    const double ky = 2 * pi * my / n + shift_y;
    std::complex<double> row = 0.0;
    for (int mx = 0; mx < n; ++mx) {
      const double kx = 2 * pi * mx / n + shift_x;
      const std::complex<double> phase = std::polar(1.0, kx * dx + ky * dy);
      const auto m = mode_data<double>(c, kx, ky);
      const std::complex<double> h{xi_sign * m.xi / m.energy, -m.delta_im / m.energy};
      row += h * phase;
    }
    acc += row;
  }
  acc /= static_cast<double>(n) * n;
  return acc;
}

std::complex<double> wick_value(const Couplings& c, int n, SectorLabel l, std::span<const Endpoint> eps,
                                MixedSign sign) {
  if (eps.size() % 2 != 0) throw std::invalid_argument("endpoint list must have even length");
  const int m = static_cast<int>(eps.size() / 2);
  if (m > kMaxPairs) {
    double count = 1;
    for (int k = 2 * m - 1; k > 1; k -= 2) count *= k;
    throw std::invalid_argument("Wick sum with M = " + std::to_string(m) + " pairs (" + std::to_string(count) +
                                " pairings) exceeds the limit M <= 8");
  }
  const int size = 2 * m;
  std::vector<std::complex<double>> g(static_cast<std::size_t>(size) * size, 0.0);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      g[static_cast<std::size_t>(i) * size + j] = pair_correlator(c, n, l, eps[i], eps[j], sign);
  std::vector<int> rest(size);
  for (int i = 0; i < size; ++i) rest[i] = i;
  return pairing_sum(g, size, rest);
}

double link_expectation_magnitude(const Couplings& c, int n, SectorLabel l, std::span<const Endpoint> eps,
                                  MixedSign sign) {
  return std::abs(wick_value(c, n, l, eps, sign));
}

SectorGap sector_gap(const Couplings& c, int n, std::span<const Endpoint> eps, MixedSign sign) {
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = i + 1; j < eps.size(); ++j) {
      const int sep = std::max(std::abs(eps[i].qx - eps[j].qx), std::abs(eps[i].qy - eps[j].qy));
      if (2 * sep > n - 1)
        throw std::invalid_argument("endpoint separation " + std::to_string(sep) +
                                    " violates ||dq||_inf <= (n - 1) / 2 for n = " + std::to_string(n));
    }
  SectorGap out;
  out.pairs = static_cast<int>(eps.size() / 2);
  std::array<std::complex<double>, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = wick_value(c, n, kSectors[i], eps, sign);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      out.gap = std::max(out.gap, std::abs(v[i] - v[j]));
      out.magnitude_gap = std::max(out.magnitude_gap, std::abs(std::abs(v[i]) - std::abs(v[j])));
    }
  if (c.jx == 0.0 && c.jy == 0.0) {
    out.lemma_bound = 0.0;
  } else if (out.pairs <= 1) {
    out.lemma_bound = string_lemma_bound(c, n);
  } else {
    out.lemma_bound = general_lemma_bound(c, n, out.pairs);
  }
  out.ok = out.gap <= out.lemma_bound;
  return out;
}

PauliClass classify_pauli(const LatticeGeom& geom, const Region& region, const PauliOperator& p) {
  const RegionLinkGroup group = region_link_group(geom, region);
  std::map<int, int> local;  // torus qubit -> local index
  for (const auto& v : group.qubits)
    local.emplace(geom.qubit_index(geom.site(v.qx, v.qy), v.leg), static_cast<int>(local.size()));
  p.for_each_support([&](std::size_t q, Letter) {
    if (!local.count(static_cast<int>(q)))
      throw std::invalid_argument("classify_pauli: operator support leaves the region");
  });

  PauliClass out;
  {
    SyndromeFrame probe(geom);
    probe.apply_inplace(p);
    if (probe.vortices() > 0) {
      out.kind = PauliClassKind::anticommutes_with_w;
      return out;
    }
  }

  const std::size_t bits = 2 * local.size();
  const std::size_t words = (bits + 63) / 64;
  const std::size_t gens = group.generators.size();
  const std::size_t cwords = (gens + 63) / 64;
  auto vec_of = [&](const PauliOperator& op) {
    std::vector<std::uint64_t> v(words, 0);
    op.for_each_support([&](std::size_t q, Letter l) {
      const auto it = local.find(static_cast<int>(q));
      const std::size_t base = 2 * static_cast<std::size_t>(it->second);
      const auto code = static_cast<unsigned>(l);
      if (code & 1U) v[base >> 6] ^= std::uint64_t{1} << (base & 63);
      if (code & 2U) v[(base + 1) >> 6] ^= std::uint64_t{1} << ((base + 1) & 63);
    });
    return v;
  };
  struct Row {
    std::vector<std::uint64_t> v;
    std::vector<std::uint64_t> combo;
    std::size_t pivot;
  };
  auto lowest_bit = [&](const std::vector<std::uint64_t>& v) -> std::size_t {
    for (std::size_t w = 0; w < v.size(); ++w)
      if (v[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
    return bits;
  };
  std::vector<Row> rows;
  auto reduce = [&](std::vector<std::uint64_t>& v, std::vector<std::uint64_t>& combo) {
    for (const auto& r : rows) {
      if (v[r.pivot >> 6] >> (r.pivot & 63) & 1U) {
        for (std::size_t w = 0; w < words; ++w) v[w] ^= r.v[w];
        for (std::size_t w = 0; w < cwords; ++w) combo[w] ^= r.combo[w];
      }
    }
  };
  for (std::size_t gi = 0; gi < gens; ++gi) {
    auto v = vec_of(link_pauli(geom, group.generators[gi]));
    std::vector<std::uint64_t> combo(cwords, 0);
    combo[gi >> 6] |= std::uint64_t{1} << (gi & 63);
    reduce(v, combo);
    const std::size_t piv = lowest_bit(v);
    if (piv == bits) continue;
    // Keep rows fully reduced on each other's pivots.
    for (auto& r : rows) {
      if (r.v[piv >> 6] >> (piv & 63) & 1U) {
        for (std::size_t w = 0; w < words; ++w) r.v[w] ^= v[w];
        for (std::size_t w = 0; w < cwords; ++w) r.combo[w] ^= combo[w];
      }
    }
    rows.push_back({std::move(v), std::move(combo), piv});
  }
  auto target = vec_of(p);
  std::vector<std::uint64_t> combo(cwords, 0);
  reduce(target, combo);
  if (lowest_bit(target) != bits) {
    if (group.simply_connected)
      throw std::logic_error("classify_pauli: W-commuting Pauli not generated by K(A) on a simply connected region");
    out.kind = PauliClassKind::not_decomposable;
    return out;
  }
  out.kind = PauliClassKind::link_operator;
  for (std::size_t gi = 0; gi < gens; ++gi)
    if (combo[gi >> 6] >> (gi & 63) & 1U) out.decomposition.push_back(group.generators[gi]);
  return out;
}

}  // namespace honeycomb

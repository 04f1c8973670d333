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

#include "honeycomb/decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "honeycomb/blossom.hpp"

namespace honeycomb {

std::vector<Mover> derive_movers() {
  const LatticeGeom ref(8, Orientation::standard);
  const DimerSite p{4, 4};
  std::vector<Mover> out;
  const Letter letters[4] = {Letter::I, Letter::X, Letter::Y, Letter::Z};
  for (Letter lo : letters)
    for (Letter up : letters) {
      if (lo == Letter::I && up == Letter::I) continue;
      SyndromeFrame f(ref);
      f.apply_letter(ref.qubit_index(p, Leg::lower), lo);
      f.apply_letter(ref.qubit_index(p, Leg::upper), up);
      if (f.broken_dimers() != 0) continue;
      Mover m{lo, up, {}};
      for (int r = 0; r < ref.dimer_count(); ++r) {
        if (f.w(r) > 0) continue;
        const DimerSite s = ref.dimer_at(r);
        m.flip_offsets.push_back({ref.torus_delta(s.qx - p.qx), ref.torus_delta(s.qy - p.qy)});
      }
      std::sort(m.flip_offsets.begin(), m.flip_offsets.end());
      out.push_back(std::move(m));
    }
  return out;
}

const DiagonalMovers& diagonal_movers() {
  static const DiagonalMovers table = [] {
    DiagonalMovers d;
    bool have_anti = false, have_diag = false;
    for (const Mover& m : derive_movers()) {
      if (!m.translates()) continue;
      auto st = m.step();
      Mover oriented = m;
      if (st[0] < 0) {
        std::swap(oriented.flip_offsets[0], oriented.flip_offsets[1]);
        st = oriented.step();
      }
      if (st == std::array<int, 2>{1, -1} && (!have_anti || m.weight() < d.anti.weight())) {
        d.anti = oriented;
        have_anti = true;
      }
      if (st == std::array<int, 2>{1, 1} && (!have_diag || m.weight() < d.diagonal.weight())) {
        d.diagonal = oriented;
        have_diag = true;
      }
    }
    if (!have_anti || !have_diag) throw std::logic_error("mover derivation found no diagonal translations");
    return d;
  }();
  return table;
}

void append_mover_path(const LatticeGeom& geom, DimerSite from, int a, int b, PauliOperator& out) {
  const DiagonalMovers& dm = diagonal_movers();
  int px = from.qx, py = from.qy;
  auto walk = [&](const Mover& m, int count) {
    const auto st = m.step();
    const int dir = count > 0 ? 1 : -1;
    const auto& anchor = dir > 0 ? m.flip_offsets[0] : m.flip_offsets[1];
    for (int k = 0; k < std::abs(count); ++k) {
      const DimerSite host = geom.site(px - anchor[0], py - anchor[1]);
      if (m.lower != Letter::I) out.multiply_letter(static_cast<std::size_t>(geom.qubit_index(host, Leg::lower)), m.lower);
      if (m.upper != Letter::I) out.multiply_letter(static_cast<std::size_t>(geom.qubit_index(host, Leg::upper)), m.upper);
      px += dir * st[0];
      py += dir * st[1];
    }
  };
  walk(dm.diagonal, a);
  walk(dm.anti, b);
}

long pairing_weight(const LatticeGeom& geom, std::span<const Defect> defects, const Pairing& p) {
  long w = 0;
  for (const auto& [i, j] : p) w += geom.defect_distance(defects[i].plaquette, defects[j].plaquette);
  return w;
}

Pairing mwpm(const LatticeGeom& geom, std::span<const Defect> defects) {
  if (defects.size() % 2 != 0)
    throw std::invalid_argument("mwpm: odd defect count " + std::to_string(defects.size()) + " (frame corruption)");
  for (const auto& d : defects)
    if (d.species != defects.front().species) throw std::invalid_argument("mwpm: defects of mixed species");
  const std::size_t m = defects.size();
  std::vector<std::vector<std::int64_t>> cost(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      cost[i][j] = cost[j][i] = geom.defect_distance(defects[i].plaquette, defects[j].plaquette);
  return min_cost_perfect_matching(cost);
}

FixResult fix_dimers(const SyndromeFrame& frame) {
  const LatticeGeom& g = frame.geom();
  FixResult r{PauliOperator(static_cast<std::size_t>(g.qubit_count())), frame};
  for (int d = 0; d < g.dimer_count(); ++d) {
    if (frame.kappa(d) > 0) continue;
    const int q = 2 * d + static_cast<int>(Leg::upper);
    r.correction.multiply_letter(static_cast<std::size_t>(q), Letter::X);
    r.frame.apply_letter(q, Letter::X);
  }
  return r;
}

std::vector<Defect> defects_of(const SyndromeFrame& frame) {
  std::vector<Defect> out;
  const LatticeGeom& g = frame.geom();
  for (int p = 0; p < g.dimer_count(); ++p)
    if (frame.w(p) < 0) {
      const DimerSite s = g.dimer_at(p);
      out.push_back({s, LatticeGeom::species(s)});
    }
  return out;
}

DecodeOutcome decode(const SyndromeFrame& frame, const LatticeGeom& geom) {
  return decode(frame, geom, logical_operators(geom));
}

DecodeOutcome decode(const SyndromeFrame& frame, const LatticeGeom& geom, const LogicalOperators& logicals) {
  FixResult fixed = fix_dimers(frame);
  DecodeOutcome out{std::move(fixed.correction), 0, false, 0};
  const std::vector<Defect> all = defects_of(fixed.frame);
  PauliOperator strings(static_cast<std::size_t>(geom.qubit_count()));
  for (int species = 0; species < 2; ++species) {
    std::vector<Defect> mine;
    for (const auto& d : all)
      if (d.species == species) mine.push_back(d);
    const Pairing pairs = mwpm(geom, mine);
    out.matching_weight += pairing_weight(geom, mine, pairs);
    for (const auto& [i, j] : pairs) {
      const DimerSite a = mine[i].plaquette, b = mine[j].plaquette;
      const int dx = geom.torus_delta(b.qx - a.qx);
      const int dy = geom.torus_delta(b.qy - a.qy);
      if ((dx + dy) % 2 != 0) throw std::logic_error("decode: matched defects differ in species");
      append_mover_path(geom, a, (dx + dy) / 2, (dx - dy) / 2, strings);
    }
  }
  fixed.frame.apply_inplace(strings);
  if (!fixed.frame.trivial_syndrome())
    throw std::logic_error("decode: correction left a nontrivial syndrome");
  out.correction *= strings;
  const PauliOperator residual = frame.accumulated_error() * out.correction;
  const ResidualClass rc = residual_class(residual, geom, logicals);
  out.success = rc.success;
  out.logical_class = rc.logical_class;
  return out;
}

}  // namespace honeycomb

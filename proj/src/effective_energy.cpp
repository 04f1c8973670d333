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

#include "honeycomb/effective_energy.hpp"

#include <algorithm>
#include <stdexcept>

namespace honeycomb {

double default_c4(const Couplings& c) { return c.jx * c.jx * c.jy * c.jy / (16 * c.jz * c.jz * c.jz); }

EffectiveCoefficients default_coefficients(const Couplings& c) {
  EffectiveCoefficients e;
  e.mu = 1.0;
  e.c4 = default_c4(c);
  e.provenance = "mu=1 (default); c4=jx^2 jy^2/(16 jz^3) (fourth order); no corrections";
  return e;
}

double config_energy(const SyndromeFrame& frame, const EffectiveCoefficients& coeff, const Couplings& c) {
  const LatticeGeom& g = frame.geom();
  long ksum = 0, wsum = 0;
  for (int q = 0; q < g.dimer_count(); ++q) {
    ksum += frame.kappa(q);
    wsum += frame.w(q);
  }
  double e = -coeff.mu * c.jz * static_cast<double>(ksum) - coeff.c4 * static_cast<double>(wsum);
  for (const auto& term : coeff.corrections) {
    long s = 0;
    for (int q = 0; q < g.dimer_count(); ++q) {
      const DimerSite base = g.dimer_at(q);
      int prod = 1;
      for (const auto& o : term.offsets) prod *= frame.w(g.dimer_index(base.qx + o[0], base.qy + o[1]));
      s += prod;
    }
    e -= term.coefficient * static_cast<double>(s);
  }
  return e;
}

double error_delta(const SyndromeFrame& frame, const PauliOperator& p, const EffectiveCoefficients& coeff,
                   const Couplings& c) {
  if (p.weight() != 1) throw std::invalid_argument("error_delta expects a single-qubit Pauli");
  const std::size_t q = p.support().front();
  return error_delta(frame, static_cast<int>(q), p.letter(q), coeff, c);
}

double error_delta(const SyndromeFrame& frame, int qubit, Letter l, const EffectiveCoefficients& coeff,
                   const Couplings& c) {
  const LatticeGeom& g = frame.geom();
  const FlipSet& f = g.flip_set(qubit, l);
  // E_before - E_after for each flipped variable v -> -v.
  double d = 0.0;
  if (f.flips_kappa) d -= 2 * coeff.mu * c.jz * frame.kappa(qubit >> 1);
  for (int i = 0; i < f.count; ++i) d -= 2 * coeff.c4 * frame.w(f.plaquettes[i]);
  if (coeff.corrections.empty() || f.count == 0) return d;
  std::array<int, 2> flipped{f.plaquettes[0], f.count > 1 ? f.plaquettes[1] : -1};
  for (const auto& term : coeff.corrections) {
    std::vector<int> bases;
    for (int i = 0; i < f.count; ++i) {
      const DimerSite s = g.dimer_at(flipped[i]);
      for (const auto& o : term.offsets) bases.push_back(g.dimer_index(s.qx - o[0], s.qy - o[1]));
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    for (int b : bases) {
      const DimerSite s = g.dimer_at(b);
      int before = 1, hits = 0;
      for (const auto& o : term.offsets) {
        const int r = g.dimer_index(s.qx + o[0], s.qy + o[1]);
        before *= frame.w(r);
        hits += (r == flipped[0]) + (r == flipped[1]);
      }
      const int after = hits % 2 ? -before : before;
      d += term.coefficient * (after - before);
    }
  }
  return d;
}

}  // namespace honeycomb

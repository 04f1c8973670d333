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

#include "honeycomb/syndrome.hpp"

#include <stdexcept>

namespace honeycomb {

SyndromeFrame::SyndromeFrame(const LatticeGeom& geom)
    : geom_(geom),
      kappa_(static_cast<std::size_t>(geom.dimer_count()), 1),
      w_(static_cast<std::size_t>(geom.dimer_count()), 1),
      error_(static_cast<std::size_t>(geom.qubit_count())) {}

void SyndromeFrame::apply_letter(int qubit, Letter l) {
  if (l == Letter::I) return;
  const FlipSet& f = geom_.flip_set(qubit, l);
  if (f.flips_kappa) {
    auto& k = kappa_[qubit >> 1];
    k = static_cast<std::int8_t>(-k);
    broken_ += k < 0 ? 1 : -1;
  }
  for (int i = 0; i < f.count; ++i) {
    auto& v = w_[f.plaquettes[i]];
    v = static_cast<std::int8_t>(-v);
    vortices_ += v < 0 ? 1 : -1;
  }
  error_.multiply_letter(static_cast<std::size_t>(qubit), l);
}

void SyndromeFrame::apply_inplace(const PauliOperator& p) {
  if (p.qubit_count() != error_.qubit_count()) throw std::invalid_argument("Pauli size does not match frame");
  p.for_each_support([&](std::size_t q, Letter l) {
    const FlipSet& f = geom_.flip_set(static_cast<int>(q), l);
    if (f.flips_kappa) {
      auto& k = kappa_[q >> 1];
      k = static_cast<std::int8_t>(-k);
      broken_ += k < 0 ? 1 : -1;
    }
    for (int i = 0; i < f.count; ++i) {
      auto& v = w_[f.plaquettes[i]];
      v = static_cast<std::int8_t>(-v);
      vortices_ += v < 0 ? 1 : -1;
    }
  });
  error_ *= p;
}

SyndromeFrame apply_error(const SyndromeFrame& frame, const PauliOperator& p) {
  SyndromeFrame out = frame;
  out.apply_inplace(p);
  return out;
}

ResidualClass residual_class(const PauliOperator& error, const LatticeGeom& geom) {
  return residual_class(error, geom, logical_operators(geom));
}

ResidualClass residual_class(const PauliOperator& error, const LatticeGeom& geom,
                             const LogicalOperators& logicals) {
  SyndromeFrame probe(geom);
  probe.apply_inplace(error);
  if (!probe.trivial_syndrome())
    throw std::logic_error("residual_class: error anticommutes with a stabilizer generator (decoder bug)");
  ResidualClass out;
  // L_x is detected by its conjugate and vice versa.
  const int detector[4] = {2, 3, 0, 1};
  for (int i = 0; i < 4; ++i)
    if (!commutes(error, logicals[detector[i]])) out.logical_class |= 1 << i;
  out.success = out.logical_class == 0;
  return out;
}

}  // namespace honeycomb

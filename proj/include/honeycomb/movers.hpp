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

#ifndef HONEYCOMB_MOVERS_HPP
#define HONEYCOMB_MOVERS_HPP

#include <array>
#include <vector>

#include "honeycomb/lattice.hpp"

namespace honeycomb {

// A single-dimer Pauli pattern that commutes with the dimer's K^z, with the
// plaquettes it flips expressed as offsets from the dimer.
struct Mover {
  Letter lower = Letter::I;
  Letter upper = Letter::I;
  std::vector<std::array<int, 2>> flip_offsets;
  int weight() const { return (lower != Letter::I) + (upper != Letter::I); }
  // Set when the mover flips exactly two plaquettes: their difference.
  bool translates() const { return flip_offsets.size() == 2; }
  std::array<int, 2> step() const {
    return {flip_offsets[1][0] - flip_offsets[0][0], flip_offsets[1][1] - flip_offsets[0][1]};
  }
};

// Every K^z-commuting single-dimer pattern other than the identity, with flip
// sets computed from the plaquette operators on a reference lattice.
std::vector<Mover> derive_movers();

// The lowest-weight translating movers along (1,-1) and (1,1).
struct DiagonalMovers {
  Mover anti;      // step (1,-1) up to sign
  Mover diagonal;  // step (1,1) up to sign
};
const DiagonalMovers& diagonal_movers();

// Multiplies `out` by a mover string that carries a defect sitting on
// plaquette `from` by a*(1,1) + b*(1,-1).
void append_mover_path(const LatticeGeom& geom, DimerSite from, int a, int b, PauliOperator& out);

}  // namespace honeycomb

#endif  // HONEYCOMB_MOVERS_HPP

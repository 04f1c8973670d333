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

#ifndef HONEYCOMB_DECODER_HPP
#define HONEYCOMB_DECODER_HPP

#include <span>
#include <utility>
#include <vector>

#include "honeycomb/movers.hpp"
#include "honeycomb/syndrome.hpp"

namespace honeycomb {

struct Defect {
  DimerSite plaquette;
  int species = 0;
};

using Pairing = std::vector<std::pair<int, int>>;

// Exact minimum-weight perfect matching of same-species defects under the
// torus defect distance. Throws std::invalid_argument for an odd count or
// mixed species.
Pairing mwpm(const LatticeGeom& geom, std::span<const Defect> defects);
long pairing_weight(const LatticeGeom& geom, std::span<const Defect> defects, const Pairing& p);

struct FixResult {
  PauliOperator correction;
  SyndromeFrame frame;
};

// X on the upper leg of every broken dimer.
FixResult fix_dimers(const SyndromeFrame& frame);

std::vector<Defect> defects_of(const SyndromeFrame& frame);

struct DecodeOutcome {
  PauliOperator correction;  // dimer fixes times matched mover strings
  long matching_weight = 0;
  bool success = false;
  int logical_class = 0;
};

// Throws std::logic_error if the correction leaves a nontrivial syndrome.
DecodeOutcome decode(const SyndromeFrame& frame, const LatticeGeom& geom);
DecodeOutcome decode(const SyndromeFrame& frame, const LatticeGeom& geom, const LogicalOperators& logicals);

}  // namespace honeycomb

#endif  // HONEYCOMB_DECODER_HPP

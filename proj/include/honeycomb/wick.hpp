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

#ifndef HONEYCOMB_WICK_HPP
#define HONEYCOMB_WICK_HPP

#include <complex>
#include <span>
#include <vector>

#include "honeycomb/free_fermion.hpp"
#include "honeycomb/lattice.hpp"

namespace honeycomb {

// A fermionized qubit: s = +1 for the lower leg, carrying c^dag + c, and
// s = -1 for the upper leg, carrying c^dag - c. Coordinates are planar so
// separations are not reduced mod n.
struct Endpoint {
  int qx = 0;
  int qy = 0;
  int s = 1;
  auto operator<=>(const Endpoint&) const = default;
};

struct LinkOperator {
  std::vector<LinkGenerator> generators;
};

// Qubits with odd generator incidence, sorted.
std::vector<Endpoint> endpoints(const LinkOperator& op);
inline bool string_like(const LinkOperator& op) { return endpoints(op).size() == 2; }

// Sign convention for the mixed-s Fourier coefficient: `plus_first` puts
// +xi on the s = +1 slot, (s_i xi - Delta)/E; `minus_first` flips it.
enum class MixedSign { plus_first, minus_first };

// <nu_i nu_j> in the vacuum of sector l.
std::complex<double> pair_correlator(const Couplings& c, int n, SectorLabel l, const Endpoint& ei,
                                     const Endpoint& ej, MixedSign sign = MixedSign::plus_first);

// Signed Wick sum over pairings of the ordered endpoint list. Uses the
// s-filtered M! sum when every same-s correlator vanishes, otherwise the full
// (2M-1)!! recursion. Throws std::invalid_argument for odd length or M > 8.
std::complex<double> wick_value(const Couplings& c, int n, SectorLabel l, std::span<const Endpoint> eps,
                                MixedSign sign = MixedSign::plus_first);

double link_expectation_magnitude(const Couplings& c, int n, SectorLabel l, std::span<const Endpoint> eps,
                                  MixedSign sign = MixedSign::plus_first);

struct SectorGap {
  double gap = 0.0;           // max over sector pairs of |value_l - value_l'|
  double magnitude_gap = 0.0; // same with magnitudes only
  double lemma_bound = 0.0;
  int pairs = 0;
  bool ok = false;
};

// Throws std::invalid_argument when some endpoint separation violates
// ||dq||_inf <= (n - 1) / 2.
SectorGap sector_gap(const Couplings& c, int n, std::span<const Endpoint> eps,
                     MixedSign sign = MixedSign::plus_first);

enum class PauliClassKind { anticommutes_with_w, link_operator, not_decomposable };

struct PauliClass {
  PauliClassKind kind = PauliClassKind::anticommutes_with_w;
  std::vector<LinkGenerator> decomposition;
};

// Throws std::invalid_argument if p has support outside the region and
// std::logic_error if no decomposition exists on a simply connected region.
PauliClass classify_pauli(const LatticeGeom& geom, const Region& region, const PauliOperator& p);

}  // namespace honeycomb

#endif  // HONEYCOMB_WICK_HPP

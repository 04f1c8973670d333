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

#ifndef HONEYCOMB_LATTICE_HPP
#define HONEYCOMB_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "honeycomb/pauli.hpp"

namespace honeycomb {

enum class Orientation { standard, rotated45 };
enum class Leg : std::uint8_t { lower = 0, upper = 1 };

std::string to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

struct DimerSite {
  int qx = 0;
  int qy = 0;
  auto operator<=>(const DimerSite&) const = default;
};

struct QubitId {
  DimerSite dimer;
  Leg leg = Leg::lower;
  bool operator==(const QubitId&) const = default;
};

// Plaquettes flipped by one single-qubit letter. Plaquette q is the hexagon
// whose lowest vertex is the upper leg of dimer q.
struct FlipSet {
  std::array<int, 2> plaquettes{-1, -1};
  int count = 0;
  bool flips_kappa = false;
};

// Periodic n x n dimer lattice. Qubit index = 2 * (qy * n + qx) + leg.
// Copies are cheap: the lookup tables are shared and immutable.
class LatticeGeom {
 public:
  LatticeGeom(int n, Orientation orientation);

  int n() const { return n_; }
  Orientation orientation() const { return orientation_; }
  int dimer_count() const { return n_ * n_; }
  int qubit_count() const { return 2 * n_ * n_; }

  int wrap(int v) const { return ((v % n_) + n_) % n_; }
  // Representative of v mod n in (-n/2, n/2].
  int torus_delta(int v) const {
    int d = wrap(v);
    return d > n_ / 2 ? d - n_ : d;
  }
  DimerSite site(int x, int y) const { return {wrap(x), wrap(y)}; }
  int dimer_index(DimerSite s) const { return wrap(s.qy) * n_ + wrap(s.qx); }
  int dimer_index(int x, int y) const { return wrap(y) * n_ + wrap(x); }
  DimerSite dimer_at(int index) const { return {index % n_, index / n_}; }
  int qubit_index(DimerSite s, Leg leg) const { return 2 * dimer_index(s) + static_cast<int>(leg); }
  int qubit_index(const QubitId& id) const { return qubit_index(id.dimer, id.leg); }
  QubitId qubit_at(int q) const { return {dimer_at(q >> 1), static_cast<Leg>(q & 1)}; }
  int translate(int dimer, int dx, int dy) const {
    return dimer_index(dimer % n_ + dx, dimer / n_ + dy);
  }

  // Row/column in the active orientation's frame. In the rotated frame rows
  // are the lines of constant qx + qy, along which Z errors move vortices.
  int frame_row(DimerSite s) const;
  int frame_col(DimerSite s) const;
  static int species(DimerSite s) { return ((s.qx + s.qy) % 2 + 2) % 2; }

  // Torus distance between same-species plaquettes: Manhattan distance on the
  // species sublattice in diagonal coordinates, i.e. the Chebyshev distance.
  int defect_distance(DimerSite a, DimerSite b) const;

  const FlipSet& flip_set(int qubit, Letter l) const {
    return tables_->flips[static_cast<std::size_t>(qubit) * 4 + static_cast<unsigned>(l)];
  }

  bool operator==(const LatticeGeom& o) const { return n_ == o.n_ && orientation_ == o.orientation_; }

 private:
  struct Tables {
    std::vector<FlipSet> flips;
  };
  int n_;
  Orientation orientation_;
  std::shared_ptr<const Tables> tables_;
};

// Throws std::invalid_argument unless n is even and >= 2.
LatticeGeom build_lattice(int n, Orientation orientation = Orientation::standard);

enum class GeneratorKind { Kx, Ky, Kz, W };

PauliOperator stabilizer_generator(const LatticeGeom& geom, GeneratorKind kind, DimerSite q);

struct LogicalOperators {
  PauliOperator lx;
  PauliOperator ly;
  PauliOperator conj_lx;  // anticommutes with lx only
  PauliOperator conj_ly;  // anticommutes with ly only
  const PauliOperator& operator[](int i) const {
    switch (i) {
      case 0: return lx;
      case 1: return ly;
      case 2: return conj_lx;
      default: return conj_ly;
    }
  }
};

LogicalOperators logical_operators(const LatticeGeom& geom);

// --- Regions -------------------------------------------------------------

// Link generator in planar (unwrapped) coordinates.
enum class LinkAxis : std::uint8_t { x, y, z };
struct LinkGenerator {
  int qx = 0;
  int qy = 0;
  LinkAxis axis = LinkAxis::z;
  auto operator<=>(const LinkGenerator&) const = default;
};

// Planar qubit coordinate (dimer position before wrapping, leg).
struct PlanarQubit {
  int qx = 0;
  int qy = 0;
  Leg leg = Leg::lower;
  auto operator<=>(const PlanarQubit&) const = default;
};

std::array<PlanarQubit, 2> link_qubits(const LinkGenerator& g);
std::array<PlanarQubit, 6> plaquette_qubits(DimerSite plaquette);
PauliOperator link_pauli(const LatticeGeom& geom, const LinkGenerator& g);

// Plaquettes in planar coordinates; they must fit inside an (n-2) x (n-2)
// box so the induced patch never wraps.
struct Region {
  std::vector<DimerSite> plaquettes;
};

struct BoundaryRestriction {
  PlanarQubit qubit;
  Letter letter = Letter::I;
  auto operator<=>(const BoundaryRestriction&) const = default;
};

struct RegionLinkGroup {
  std::vector<PlanarQubit> qubits;            // A
  std::vector<LinkGenerator> generators;      // K(A)
  std::vector<DimerSite> plaquettes;          // W(A)
  std::vector<BoundaryRestriction> boundary;  // B(A)
  bool connected = false;
  bool simply_connected = false;
  bool euler_ok = false;
  // log2 of the link group order, |K(A)|.
  std::size_t group_log2_size() const { return generators.size(); }
};

// Throws std::invalid_argument on an empty or wrapping region.
RegionLinkGroup region_link_group(const LatticeGeom& geom, const Region& region);

}  // namespace honeycomb

#endif  // HONEYCOMB_LATTICE_HPP

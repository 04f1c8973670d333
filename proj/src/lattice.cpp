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

#include "honeycomb/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "honeycomb/movers.hpp"

namespace honeycomb {

namespace {

struct PlacedLetter {
  int dx;
  int dy;
  Leg leg;
  Letter letter;
};

// W_q = Z(q,up) X(q+ny,lo) Y(q+ny,up) Z(q+nx+ny,lo) X(q+nx,up) Y(q+nx,lo)
constexpr std::array<PlacedLetter, 6> kPlaquetteLetters = {{
    {0, 0, Leg::upper, Letter::Z},
    {0, 1, Leg::lower, Letter::X},
    {0, 1, Leg::upper, Letter::Y},
    {1, 1, Leg::lower, Letter::Z},
    {1, 0, Leg::upper, Letter::X},
    {1, 0, Leg::lower, Letter::Y},
}};

bool letters_anticommute(Letter a, Letter b) {
  return a != Letter::I && b != Letter::I && a != b;
}

}  // namespace

std::string to_string(Orientation o) {
  return o == Orientation::standard ? "standard" : "rotated45";
}

Orientation orientation_from_string(const std::string& s) {
  if (s == "standard") return Orientation::standard;
  if (s == "rotated45") return Orientation::rotated45;
  throw std::invalid_argument("unknown orientation '" + s + "' (expected standard or rotated45)");
}

LatticeGeom::LatticeGeom(int n, Orientation orientation) : n_(n), orientation_(orientation) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("lattice size n = " + std::to_string(n) +
                                " rejected: n must be even and at least 2");
  auto tables = std::make_shared<Tables>();
  tables->flips.assign(static_cast<std::size_t>(qubit_count()) * 4, FlipSet{});
  auto add = [&](int qubit, Letter l, int plaquette) {
    FlipSet& f = tables->flips[static_cast<std::size_t>(qubit) * 4 + static_cast<unsigned>(l)];
    // n = 2 can place the same plaquette twice; flips cancel pairwise.
    for (int i = 0; i < f.count; ++i) {
      if (f.plaquettes[i] == plaquette) {
        f.plaquettes[i] = f.plaquettes[f.count - 1];
        f.plaquettes[--f.count] = -1;
        return;
      }
    }
    f.plaquettes[f.count++] = plaquette;
  };
  for (int p = 0; p < dimer_count(); ++p) {
    const DimerSite s = dimer_at(p);
    for (const auto& pl : kPlaquetteLetters) {
      const int qubit = qubit_index(site(s.qx + pl.dx, s.qy + pl.dy), pl.leg);
      for (Letter l : {Letter::X, Letter::Y, Letter::Z})
        if (letters_anticommute(l, pl.letter)) add(qubit, l, p);
    }
  }
  for (int q = 0; q < qubit_count(); ++q) {
    for (Letter l : {Letter::X, Letter::Y}) {
      tables->flips[static_cast<std::size_t>(q) * 4 + static_cast<unsigned>(l)].flips_kappa = true;
    }
  }
  tables_ = std::move(tables);
}

int LatticeGeom::frame_row(DimerSite s) const {
  return orientation_ == Orientation::standard ? wrap(s.qy) : wrap(s.qx + s.qy);
}

int LatticeGeom::frame_col(DimerSite s) const {
  return orientation_ == Orientation::standard ? wrap(s.qx) : wrap(s.qx - s.qy);
}

int LatticeGeom::defect_distance(DimerSite a, DimerSite b) const {
  return std::max(std::abs(torus_delta(b.qx - a.qx)), std::abs(torus_delta(b.qy - a.qy)));
}

LatticeGeom build_lattice(int n, Orientation orientation) { return LatticeGeom(n, orientation); }

PauliOperator stabilizer_generator(const LatticeGeom& geom, GeneratorKind kind, DimerSite q) {
  const auto nq = static_cast<std::size_t>(geom.qubit_count());
  PauliOperator p(nq);
  auto put = [&](int dx, int dy, Leg leg, Letter l) {
    p.multiply_letter(static_cast<std::size_t>(geom.qubit_index(geom.site(q.qx + dx, q.qy + dy), leg)), l);
  };
  switch (kind) {
    case GeneratorKind::Kz:
      put(0, 0, Leg::upper, Letter::Z);
      put(0, 0, Leg::lower, Letter::Z);
      break;
    case GeneratorKind::Kx:
      put(0, 0, Leg::upper, Letter::X);
      put(1, 0, Leg::lower, Letter::X);
      break;
    case GeneratorKind::Ky:
      put(0, 0, Leg::upper, Letter::Y);
      put(0, 1, Leg::lower, Letter::Y);
      break;
    case GeneratorKind::W:
      for (const auto& pl : kPlaquetteLetters) put(pl.dx, pl.dy, pl.leg, pl.letter);
      break;
  }
  return p;
}

LogicalOperators logical_operators(const LatticeGeom& geom) {
  const int n = geom.n();
  const auto nq = static_cast<std::size_t>(geom.qubit_count());
  LogicalOperators out{PauliOperator(nq), PauliOperator(nq), PauliOperator(nq), PauliOperator(nq)};
  for (int x = 0; x < n; ++x) {
    out.lx *= stabilizer_generator(geom, GeneratorKind::Kz, {x, 0});
    out.lx *= stabilizer_generator(geom, GeneratorKind::Kx, {x, 0});
  }
  for (int y = 0; y < n; ++y) {
    out.ly *= stabilizer_generator(geom, GeneratorKind::Kz, {0, y});
    out.ly *= stabilizer_generator(geom, GeneratorKind::Ky, {0, y});
  }

  // Closed mover loops: horizontal, vertical, diagonal and anti-diagonal
  // windings. Their products are searched for the conjugate partners.
  const std::array<std::array<int, 2>, 4> windings = {{{n / 2, n / 2}, {n / 2, -n / 2}, {n, 0}, {0, n}}};
  std::vector<PauliOperator> loops;
  for (const auto& w : windings) {
    PauliOperator loop(nq);
    append_mover_path(geom, {0, 0}, w[0], w[1], loop);
    loops.push_back(std::move(loop));
  }
  const PauliOperator* best[2] = {nullptr, nullptr};
  std::vector<PauliOperator> candidates;
  candidates.reserve(15);
  for (int mask = 1; mask < 16; ++mask) {
    PauliOperator c(nq);
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) c *= loops[i];
    candidates.push_back(std::move(c));
  }
  for (const auto& c : candidates) {
    const bool ax = !commutes(c, out.lx);
    const bool ay = !commutes(c, out.ly);
    if (ax == ay) continue;
    const int slot = ax ? 0 : 1;
    if (!best[slot] || c.weight() < best[slot]->weight()) best[slot] = &c;
  }
  if (!best[0] || !best[1]) throw std::logic_error("conjugate logical search failed");
  out.conj_lx = *best[0];
  out.conj_ly = *best[1];
  out.conj_lx.set_phase(0);
  out.conj_ly.set_phase(0);
  if (!commutes(out.conj_lx, out.conj_ly)) out.conj_ly *= out.lx;
  return out;
}

}  // namespace honeycomb

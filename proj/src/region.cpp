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

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "honeycomb/lattice.hpp"

namespace honeycomb {

namespace {

Letter axis_letter(LinkAxis a) {
  switch (a) {
    case LinkAxis::x: return Letter::X;
    case LinkAxis::y: return Letter::Y;
    case LinkAxis::z: return Letter::Z;
  }
  return Letter::I;
}

// The three links incident to a qubit.
std::array<LinkGenerator, 3> incident_links(const PlanarQubit& v) {
  if (v.leg == Leg::upper)
    return {{{v.qx, v.qy, LinkAxis::z}, {v.qx, v.qy, LinkAxis::x}, {v.qx, v.qy, LinkAxis::y}}};
  return {{{v.qx, v.qy, LinkAxis::z}, {v.qx - 1, v.qy, LinkAxis::x}, {v.qx, v.qy - 1, LinkAxis::y}}};
}

// Hexagon neighbours and the link each pair shares.
struct HexStep {
  int dx, dy;
  int ex, ey;  // link position relative to the hexagon being left
  LinkAxis axis;
};
constexpr std::array<HexStep, 6> kHexSteps = {{
    {1, 0, 1, 0, LinkAxis::y},
    {-1, 0, 0, 0, LinkAxis::y},
    {0, 1, 0, 1, LinkAxis::x},
    {0, -1, 0, 0, LinkAxis::x},
    {1, -1, 1, 0, LinkAxis::z},
    {-1, 1, 0, 1, LinkAxis::z},
}};

}  // namespace

std::array<PlanarQubit, 2> link_qubits(const LinkGenerator& g) {
  switch (g.axis) {
    case LinkAxis::z: return {{{g.qx, g.qy, Leg::upper}, {g.qx, g.qy, Leg::lower}}};
    case LinkAxis::x: return {{{g.qx, g.qy, Leg::upper}, {g.qx + 1, g.qy, Leg::lower}}};
    case LinkAxis::y: return {{{g.qx, g.qy, Leg::upper}, {g.qx, g.qy + 1, Leg::lower}}};
  }
  return {};
}

std::array<PlanarQubit, 6> plaquette_qubits(DimerSite p) {
  return {{{p.qx, p.qy, Leg::upper},
           {p.qx, p.qy + 1, Leg::lower},
           {p.qx, p.qy + 1, Leg::upper},
           {p.qx + 1, p.qy + 1, Leg::lower},
           {p.qx + 1, p.qy, Leg::upper},
           {p.qx + 1, p.qy, Leg::lower}}};
}

PauliOperator link_pauli(const LatticeGeom& geom, const LinkGenerator& g) {
  const GeneratorKind kind = g.axis == LinkAxis::x   ? GeneratorKind::Kx
                             : g.axis == LinkAxis::y ? GeneratorKind::Ky
                                                     : GeneratorKind::Kz;
  return stabilizer_generator(geom, kind, geom.site(g.qx, g.qy));
}

RegionLinkGroup region_link_group(const LatticeGeom& geom, const Region& region) {
  if (region.plaquettes.empty()) throw std::invalid_argument("region must contain at least one plaquette");
  std::set<DimerSite> chosen(region.plaquettes.begin(), region.plaquettes.end());
  int minx = chosen.begin()->qx, maxx = minx, miny = chosen.begin()->qy, maxy = miny;
  for (const auto& p : chosen) {
    minx = std::min(minx, p.qx);
    maxx = std::max(maxx, p.qx);
    miny = std::min(miny, p.qy);
    maxy = std::max(maxy, p.qy);
  }
  if (maxx - minx > geom.n() - 3 || maxy - miny > geom.n() - 3)
    throw std::invalid_argument("region wraps the periodic boundary: plaquette extent must be at most n - 3");

  RegionLinkGroup out;
  std::set<PlanarQubit> qubits;
  for (const auto& p : chosen)
    for (const auto& v : plaquette_qubits(p)) qubits.insert(v);

  std::set<LinkGenerator> links;
  for (const auto& v : qubits) {
    for (const auto& g : incident_links(v)) {
      const auto ends = link_qubits(g);
      const bool inside = qubits.count(ends[0]) && qubits.count(ends[1]);
      if (inside) {
        links.insert(g);
      } else {
        out.boundary.push_back({v, axis_letter(g.axis)});
      }
    }
  }

  std::set<DimerSite> faces;
  for (const auto& v : qubits) {
    for (const auto& cand : {DimerSite{v.qx, v.qy}, DimerSite{v.qx, v.qy - 1}, DimerSite{v.qx - 1, v.qy - 1},
                             DimerSite{v.qx - 1, v.qy}}) {
      const auto hex = plaquette_qubits(cand);
      if (std::all_of(hex.begin(), hex.end(), [&](const PlanarQubit& u) { return qubits.count(u) > 0; }))
        faces.insert(cand);
    }
  }

  out.qubits.assign(qubits.begin(), qubits.end());
  out.generators.assign(links.begin(), links.end());
  out.plaquettes.assign(faces.begin(), faces.end());
  std::sort(out.boundary.begin(), out.boundary.end());

  // Plaquette-adjacency flood fill over the chosen plaquettes.
  {
    std::set<DimerSite> seen{*chosen.begin()};
    std::queue<DimerSite> todo;
    todo.push(*chosen.begin());
    while (!todo.empty()) {
      const DimerSite p = todo.front();
      todo.pop();
      for (const auto& st : kHexSteps) {
        const DimerSite nb{p.qx + st.dx, p.qy + st.dy};
        if (chosen.count(nb) && seen.insert(nb).second) todo.push(nb);
      }
    }
    out.connected = seen.size() == chosen.size();
  }

  // Complement flood fill: every hexagon of a padded box that is not a face
  // must be reachable from outside without crossing a link of K(A).
  bool holes = false;
  {
    const int x0 = minx - 2, x1 = maxx + 2, y0 = miny - 2, y1 = maxy + 2;
    std::set<DimerSite> seen{{x0, y0}};
    std::queue<DimerSite> todo;
    todo.push({x0, y0});
    while (!todo.empty()) {
      const DimerSite p = todo.front();
      todo.pop();
      for (const auto& st : kHexSteps) {
        const DimerSite nb{p.qx + st.dx, p.qy + st.dy};
        if (nb.qx < x0 || nb.qx > x1 || nb.qy < y0 || nb.qy > y1) continue;
        if (faces.count(nb)) continue;
        if (links.count({p.qx + st.ex, p.qy + st.ey, st.axis})) continue;
        if (seen.insert(nb).second) todo.push(nb);
      }
    }
    const long box = static_cast<long>(x1 - x0 + 1) * (y1 - y0 + 1);
    holes = static_cast<long>(seen.size()) + static_cast<long>(faces.size()) != box;
  }
  out.simply_connected = out.connected && !holes;
  out.euler_ok = static_cast<long>(out.qubits.size()) - static_cast<long>(out.generators.size()) +
                     static_cast<long>(out.plaquettes.size()) ==
                 1;
  return out;
}

}  // namespace honeycomb

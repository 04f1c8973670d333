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

#include "honeycomb/diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace honeycomb {

HoppingModel HoppingModel::nearest_neighbour(double tx, double ty) {
  HoppingModel m;
  m.amplitudes[{1, 0}] = m.amplitudes[{-1, 0}] = -tx;
  m.amplitudes[{0, 1}] = m.amplitudes[{0, -1}] = -ty;
  m.provenance = "explicit";
  return m;
}

HoppingModel HoppingModel::from_couplings(const Couplings& c) {
  HoppingModel m = nearest_neighbour(c.jx * c.jx / (2 * c.jz), c.jy * c.jy / (2 * c.jz));
  m.provenance = "provisional second-order amplitudes jx^2/(2jz), jy^2/(2jz)";
  return m;
}

bool HoppingModel::hermitian(double tol) const {
  for (const auto& [d, a] : amplitudes) {
    auto it = amplitudes.find({-d[0], -d[1]});
    const std::complex<double> back = it == amplitudes.end() ? 0.0 : it->second;
    if (std::abs(back - std::conj(a)) > tol) return false;
  }
  return true;
}

Eigen::MatrixXcd hopping_matrix(const HoppingModel& model, int n) {
  const LatticeGeom geom(n, Orientation::standard);
  const int dim = geom.dimer_count();
  if (!model.onsite.empty() && static_cast<int>(model.onsite.size()) != dim)
    throw std::invalid_argument("hopping model: onsite energies need " + std::to_string(dim) + " entries");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!model.onsite.empty()) h(r, r) += model.onsite[r];
    for (const auto& [d, a] : model.amplitudes) h(geom.translate(r, d[0], d[1]), r) += a;
  }
  return h;
}

std::vector<WalkState> evolve(const HoppingModel& model, int n, DimerSite start, const std::vector<double>& times) {
  if (!model.hermitian()) throw std::invalid_argument("evolve: hopping model is not Hermitian");
  if (n > 32) throw std::invalid_argument("evolve: dense propagation supports n <= 32");
  const LatticeGeom geom(n, Orientation::standard);
  const Eigen::MatrixXcd h = hopping_matrix(model, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  const Eigen::MatrixXcd& v = eig.eigenvectors();
  const Eigen::VectorXd& e = eig.eigenvalues();
  // Coefficients of the point excitation in the eigenbasis.
  const Eigen::VectorXcd c0 = v.row(geom.dimer_index(start)).adjoint();
  std::vector<WalkState> out;
  out.reserve(times.size());
  for (double t : times) {
    Eigen::VectorXcd ct(c0.size());
    for (Eigen::Index k = 0; k < c0.size(); ++k) ct[k] = std::polar(1.0, -e[k] * t) * c0[k];
    out.push_back({v * ct, t});
  }
  return out;
}

std::vector<double> distance_distribution(const WalkState& state, int n, DimerSite start) {
  const LatticeGeom geom(n, Orientation::standard);
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  for (int r = 0; r < geom.dimer_count(); ++r) {
    const DimerSite s = geom.dimer_at(r);
    const int d = std::abs(geom.torus_delta(s.qx - start.qx)) + std::abs(geom.torus_delta(s.qy - start.qy));
    p[d] += std::norm(state.amplitudes[r]);
  }
  return p;
}

double mean_distance(const std::vector<double>& distribution) {
  double m = 0.0;
  for (std::size_t d = 0; d < distribution.size(); ++d) m += static_cast<double>(d) * distribution[d];
  return m;
}

double energy_expectation(const HoppingModel& model, int n, const WalkState& state) {
  return (state.amplitudes.adjoint() * hopping_matrix(model, n) * state.amplitudes)(0, 0).real();
}

}  // namespace honeycomb

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

#ifndef HONEYCOMB_DIFFUSION_HPP
#define HONEYCOMB_DIFFUSION_HPP

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "honeycomb/free_fermion.hpp"
#include "honeycomb/lattice.hpp"

namespace honeycomb {

// Single broken-dimer hopping Hamiltonian on the n x n dimer torus:
// H = sum_{r,d} amplitude(d) |r + d><r| + sum_r onsite(r) |r><r|.
struct HoppingModel {
  std::map<std::array<int, 2>, std::complex<double>> amplitudes;
  std::vector<double> onsite;  // empty or n^2 entries
  std::string provenance;

  // -t_x along (+-1, 0), -t_y along (0, +-1) with t_x = jx^2/(2jz) and
  // t_y = jy^2/(2jz). Provisional: not yet fitted to an exact band.
  static HoppingModel from_couplings(const Couplings& c);
  // Decoupled nearest-neighbour model with explicit amplitudes.
  static HoppingModel nearest_neighbour(double tx, double ty);

  // amplitude(-d) == conj(amplitude(d)) to `tol` and real onsite energies.
  bool hermitian(double tol = 1e-12) const;
};

struct WalkState {
  Eigen::VectorXcd amplitudes;  // indexed by dimer index
  double time = 0.0;
  double norm() const { return amplitudes.norm(); }
};

Eigen::MatrixXcd hopping_matrix(const HoppingModel& model, int n);

// Exact evolution of a point excitation at `start` by one dense spectral
// factorization. Throws std::invalid_argument for a non-Hermitian model or a
// lattice beyond 32 x 32.
std::vector<WalkState> evolve(const HoppingModel& model, int n, DimerSite start, const std::vector<double>& times);

// P(d) for torus Manhattan distance d = 0..n from `start`.
std::vector<double> distance_distribution(const WalkState& state, int n, DimerSite start);
double mean_distance(const std::vector<double>& distribution);

double energy_expectation(const HoppingModel& model, int n, const WalkState& state);

}  // namespace honeycomb

#endif  // HONEYCOMB_DIFFUSION_HPP

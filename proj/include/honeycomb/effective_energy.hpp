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

#ifndef HONEYCOMB_EFFECTIVE_ENERGY_HPP
#define HONEYCOMB_EFFECTIVE_ENERGY_HPP

#include <array>
#include <string>
#include <vector>

#include "honeycomb/free_fermion.hpp"
#include "honeycomb/syndrome.hpp"

namespace honeycomb {

// Contributes -coefficient * sum_q prod_{o in offsets} w_{q+o}.
struct ClusterTerm {
  std::vector<std::array<int, 2>> offsets;
  double coefficient = 0.0;
};

struct EffectiveCoefficients {
  double mu = 1.0;
  double c4 = 0.0;
  std::vector<ClusterTerm> corrections;
  std::string provenance;
};

// jx^2 jy^2 / (16 jz^3)
double default_c4(const Couplings& c);
EffectiveCoefficients default_coefficients(const Couplings& c);

double config_energy(const SyndromeFrame& frame, const EffectiveCoefficients& coeff, const Couplings& c);

// E(frame) - E(frame after p); positive means p lowers the energy.
// Throws std::invalid_argument unless p acts on exactly one qubit.
double error_delta(const SyndromeFrame& frame, const PauliOperator& p, const EffectiveCoefficients& coeff,
                   const Couplings& c);
double error_delta(const SyndromeFrame& frame, int qubit, Letter l, const EffectiveCoefficients& coeff,
                   const Couplings& c);

}  // namespace honeycomb

#endif  // HONEYCOMB_EFFECTIVE_ENERGY_HPP

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

#ifndef HONEYCOMB_SYNDROME_HPP
#define HONEYCOMB_SYNDROME_HPP

#include <cstdint>
#include <vector>

#include "honeycomb/lattice.hpp"
#include "honeycomb/pauli.hpp"

namespace honeycomb {

// Eigenvalues of every K^z (kappa) and W (w), indexed by dimer/plaquette, plus
// the error accumulated since the all +1 start.
class SyndromeFrame {
 public:
  explicit SyndromeFrame(const LatticeGeom& geom);

  const LatticeGeom& geom() const { return geom_; }
  const std::vector<std::int8_t>& kappa() const { return kappa_; }
  const std::vector<std::int8_t>& w() const { return w_; }
  int kappa(int dimer) const { return kappa_[dimer]; }
  int w(int plaquette) const { return w_[plaquette]; }
  const PauliOperator& accumulated_error() const { return error_; }
  double clock() const { return clock_; }
  void set_clock(double t) { clock_ = t; }

  int broken_dimers() const { return broken_; }
  int vortices() const { return vortices_; }
  double dimer_density() const { return static_cast<double>(broken_) / geom_.dimer_count(); }

  // Hot-path update for one letter on one qubit.
  void apply_letter(int qubit, Letter l);
  void apply_inplace(const PauliOperator& p);

  bool same_syndrome(const SyndromeFrame& o) const { return kappa_ == o.kappa_ && w_ == o.w_; }
  bool trivial_syndrome() const { return broken_ == 0 && vortices_ == 0; }

 private:
  LatticeGeom geom_;
  std::vector<std::int8_t> kappa_;
  std::vector<std::int8_t> w_;
  PauliOperator error_;
  double clock_ = 0.0;
  int broken_ = 0;
  int vortices_ = 0;
};

SyndromeFrame apply_error(const SyndromeFrame& frame, const PauliOperator& p);

// 4-bit logical class of a syndrome-free residual: bit i is set when the
// residual contains logical_operators()[i] in its decomposition, so bit 0
// (L_x) is detected by anticommutation with the L_x conjugate.
struct ResidualClass {
  bool success = true;
  int logical_class = 0;
};

// Throws std::logic_error if the error anticommutes with any K^z or W.
ResidualClass residual_class(const PauliOperator& error, const LatticeGeom& geom);
ResidualClass residual_class(const PauliOperator& error, const LatticeGeom& geom,
                             const LogicalOperators& logicals);

}  // namespace honeycomb

#endif  // HONEYCOMB_SYNDROME_HPP

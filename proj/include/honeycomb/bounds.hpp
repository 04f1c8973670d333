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

#ifndef HONEYCOMB_BOUNDS_HPP
#define HONEYCOMB_BOUNDS_HPP

#include "honeycomb/free_fermion.hpp"

namespace honeycomb {

struct GapConstants {
  double a = 0.0;  // ln((jz - jy) / jx)
  double b = 0.0;  // ln((jz - jx) / jy)
  double Q = 0.0;  // 2 sqrt(2) sqrt(jx^2 + (jz - jy)^2)
  double R = 0.0;  // 2 sqrt(2) sqrt(jy^2 + (jz - jx)^2)
  double c = 0.0;  // 4 sqrt(2) / sinh(a / 2)
};

// All of these throw std::domain_error outside the gapped phase.
GapConstants gap_constants(const Couplings& c);

// jz * 16 sqrt(2) n^2 / (e^{a n} - 1)
double splitting_bound(const Couplings& c, int n);

struct VolumeBound {
  double value = 0.0;
  long max_volume = 0;
};

// Delta(n) = c e^{-a n / 4}, |A| <= (a n / 4) / ln(a n / 4 + 1)
VolumeBound indistinguishability_bound(const Couplings& c, int n);
// eps(n) = sqrt(3 c / 8) e^{-a n / 16}, |A| <= min{a n / (8 ln 4), (a n / 4) / ln(a n / 4 + 1)}
VolumeBound correctability_bound(const Couplings& c, int n);

// Single-pair and M-pair link operator bounds, c e^{-a n / 2 + M ln M}.
double string_lemma_bound(const Couplings& c, int n);
double general_lemma_bound(const Couplings& c, int n, int pairs);

struct QuadratureCertificate {
  double observed_error = 0.0;
  double davis_bound = 0.0;
  bool saturated = false;  // observed error below the double noise floor
  bool ok = false;
};

inline constexpr double kQuadratureNoiseFloor = 1e-14;

// Compares the size-n energy density with the resolution-4096 limit against
// Q/(e^{an}-1) + R/(e^{bn}-1), the two-dimensional rectangular-rule bound for
// the halved integrand -E/2.
QuadratureCertificate quadrature_certificate(const Couplings& c, int n);

// Limit is passed in so parameter sweeps reuse one evaluation.
QuadratureCertificate quadrature_certificate(const Couplings& c, int n, double limit);

}  // namespace honeycomb

#endif  // HONEYCOMB_BOUNDS_HPP

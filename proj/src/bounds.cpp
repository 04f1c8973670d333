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

#include "honeycomb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace honeycomb {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// 1 / (e^x - 1), zero at x = +inf.
double inv_expm1(double x) { return std::isinf(x) ? 0.0 : 1.0 / std::expm1(x); }

}  // namespace

GapConstants gap_constants(const Couplings& c) {
  c.require_gapped();
  GapConstants g;
  g.a = std::log((c.jz - c.jy) / c.jx);
  g.b = std::log((c.jz - c.jx) / c.jy);
  g.Q = 2 * kSqrt2 * std::hypot(c.jx, c.jz - c.jy);
  g.R = 2 * kSqrt2 * std::hypot(c.jy, c.jz - c.jx);
  g.c = 4 * kSqrt2 / std::sinh(g.a / 2);
  return g;
}

double splitting_bound(const Couplings& c, int n) {
  const GapConstants g = gap_constants(c);
  return c.jz * 16 * kSqrt2 * n * n * inv_expm1(g.a * n);
}

VolumeBound indistinguishability_bound(const Couplings& c, int n) {
  const GapConstants g = gap_constants(c);
  const double s = g.a * n / 4;
  return {g.c * std::exp(-s), static_cast<long>(std::floor(s / std::log1p(s)))};
}

VolumeBound correctability_bound(const Couplings& c, int n) {
  const GapConstants g = gap_constants(c);
  const double s = g.a * n / 4;
  const double vol = std::min(g.a * n / (8 * std::log(4.0)), s / std::log1p(s));
  return {std::sqrt(3 * g.c / 8) * std::exp(-g.a * n / 16), static_cast<long>(std::floor(vol))};
}

double string_lemma_bound(const Couplings& c, int n) {
  const GapConstants g = gap_constants(c);
  return g.c * std::exp(-g.a * n / 2);
}

double general_lemma_bound(const Couplings& c, int n, int pairs) {
  const GapConstants g = gap_constants(c);
  return g.c * std::exp(-g.a * n / 2 + pairs * std::log(static_cast<double>(pairs)));
}

QuadratureCertificate quadrature_certificate(const Couplings& c, int n) {
  return quadrature_certificate(c, n, energy_density_limit<double>(c, 4096));
}

QuadratureCertificate quadrature_certificate(const Couplings& c, int n, double limit) {
  QuadratureCertificate q;
  const double density = sector_energy<double>(c, n, {-1, -1}) / (static_cast<double>(n) * n);
  q.observed_error = std::abs(density - limit);
  if (c.jx == 0.0 && c.jy == 0.0) {
    q.davis_bound = 0.0;
  } else {
    const GapConstants g = gap_constants(c);
    q.davis_bound = g.Q * inv_expm1(g.a * n) + g.R * inv_expm1(g.b * n);
  }
  if (q.observed_error < kQuadratureNoiseFloor) {
    // Below the floor the error is roundoff; report the floor unless the
    // two sums agree exactly.
    q.saturated = true;
    if (q.observed_error > 0.0) q.observed_error = kQuadratureNoiseFloor;
    q.ok = true;
  } else {
    q.ok = q.observed_error <= q.davis_bound;
  }
  return q;
}

}  // namespace honeycomb

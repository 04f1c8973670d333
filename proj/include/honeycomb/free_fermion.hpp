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

#ifndef HONEYCOMB_FREE_FERMION_HPP
#define HONEYCOMB_FREE_FERMION_HPP

#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace honeycomb {

struct Couplings {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 1.0;

  bool gapped() const { return jz > jx && jx >= jy && jy > 0 && jz > jx + jy; }
  // Throws std::domain_error naming the first violated inequality.
  void require_gapped() const;
};

struct SectorLabel {
  int lx = 1;
  int ly = 1;
  bool operator==(const SectorLabel&) const = default;
};

inline constexpr std::array<SectorLabel, 4> kSectors = {{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

std::string to_string(SectorLabel l);

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

template <class Scalar>
struct Momentum {
  Scalar kx;
  Scalar ky;
};

template <class Scalar>
struct ModeData {
  Scalar xi;
  Scalar delta_abs;
  Scalar energy;
  Scalar u;
  std::complex<double> v;  // phase |Delta|/Delta times its real magnitude
  Scalar v_abs;
  // Delta_k is purely imaginary: Delta = i * delta_im.
  Scalar delta_im;
};

template <class Scalar>
Scalar pi_v() {
  return boost::math::constants::pi<Scalar>();
}

// k_a = 2 pi m / n + ((l_a + 1) / 2) pi / n, m = 0..n-1, row-major in (m_y, m_x).
template <class Scalar = double>
std::vector<Momentum<Scalar>> mode_grid(int n, SectorLabel l) {
  const Scalar pi = pi_v<Scalar>();
  const Scalar sx = Scalar(l.lx + 1) / 2 * pi / n;
  const Scalar sy = Scalar(l.ly + 1) / 2 * pi / n;
  std::vector<Momentum<Scalar>> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int my = 0; my < n; ++my)
    for (int mx = 0; mx < n; ++mx) out.push_back({2 * pi * mx / n + sx, 2 * pi * my / n + sy});
  return out;
}

template <class Scalar = double>
ModeData<Scalar> mode_data(const Couplings& c, Scalar kx, Scalar ky) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  using std::abs;
  ModeData<Scalar> m;
  m.xi = 2 * Scalar(c.jx) * cos(kx) + 2 * Scalar(c.jy) * cos(ky) + 2 * Scalar(c.jz);
  m.delta_im = 2 * Scalar(c.jx) * sin(kx) + 2 * Scalar(c.jy) * sin(ky);
  m.delta_abs = abs(m.delta_im);
  m.energy = sqrt(m.xi * m.xi + m.delta_im * m.delta_im);
  m.u = sqrt((1 + m.xi / m.energy) / 2);
  m.v_abs = sqrt((1 - m.xi / m.energy) / 2);
  // |Delta|/Delta = -i sign(delta_im); set to 1 where Delta vanishes.
  const double va = static_cast<double>(m.v_abs);
  if (m.delta_im > 0)
    m.v = {0.0, -va};
  else if (m.delta_im < 0)
    m.v = {0.0, va};
  else
    m.v = {va, 0.0};
  return m;
}

// Energy of one mode, E_k = sqrt(xi^2 + |Delta|^2).
template <class Scalar>
Scalar mode_energy(const Couplings& c, const Scalar& kx, const Scalar& ky) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const Scalar xi = 2 * Scalar(c.jx) * cos(kx) + 2 * Scalar(c.jy) * cos(ky) + 2 * Scalar(c.jz);
  const Scalar d = 2 * Scalar(c.jx) * sin(kx) + 2 * Scalar(c.jy) * sin(ky);
  return sqrt(xi * xi + d * d);
}

enum class Summation { pairwise, compensated };

template <class Scalar>
Scalar pairwise_sum(std::span<const Scalar> v) {
  if (v.size() <= 8) {
    Scalar s = 0;
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

template <class Scalar>
Scalar compensated_sum(std::span<const Scalar> v) {
  using std::abs;
  Scalar s = 0, comp = 0;
  for (const auto& x : v) {
    const Scalar t = s + x;
    if (abs(s) >= abs(x))
      comp += (s - t) + x;
    else
      comp += (x - t) + s;
    s = t;
  }
  return s + comp;
}

// E_l = sum over the l-shifted grid of -E_k / 2. The grid is separable, so
// the cosines and sines are tabulated per axis.
template <class Scalar = double>
Scalar sector_energy(const Couplings& c, int n, SectorLabel l, Summation mode = Summation::pairwise) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const Scalar pi = pi_v<Scalar>();
  std::vector<Scalar> cx(n), sx(n), cy(n), sy(n);
  for (int m = 0; m < n; ++m) {
    const Scalar kx = 2 * pi * m / n + Scalar(l.lx + 1) / 2 * pi / n;
    const Scalar ky = 2 * pi * m / n + Scalar(l.ly + 1) / 2 * pi / n;
    cx[m] = 2 * Scalar(c.jx) * cos(kx);
    sx[m] = 2 * Scalar(c.jx) * sin(kx);
    cy[m] = 2 * Scalar(c.jy) * cos(ky);
    sy[m] = 2 * Scalar(c.jy) * sin(ky);
  }
  const Scalar jz2 = 2 * Scalar(c.jz);
  std::vector<Scalar> terms;
  terms.reserve(static_cast<std::size_t>(n) * n);
  for (int my = 0; my < n; ++my)
    for (int mx = 0; mx < n; ++mx) {
      const Scalar xi = cx[mx] + cy[my] + jz2;
      const Scalar d = sx[mx] + sy[my];
      terms.push_back(-sqrt(xi * xi + d * d) / 2);
    }
  std::span<const Scalar> view(terms);
  return mode == Summation::pairwise ? pairwise_sum(view) : compensated_sum(view);
}

// Largest |E_l - E_l'| over the six sector pairs. Gapped phase required.
template <class Scalar = double>
Scalar splitting(const Couplings& c, int n, Summation mode = Summation::pairwise) {
  using std::abs;
  c.require_gapped();
  std::array<Scalar, 4> e;
  for (int i = 0; i < 4; ++i) e[i] = sector_energy<Scalar>(c, n, kSectors[i], mode);
  Scalar best = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Scalar d = abs(e[i] - e[j]);
      if (d > best) best = d;
    }
  return best;
}

// Rectangular-rule value of (1/4pi^2) * integral of -E(x,y)/2 over the torus.
template <class Scalar = double>
Scalar energy_density_limit(const Couplings& c, int resolution = 4096) {
  if (resolution < 512) throw std::invalid_argument("energy_density_limit: resolution must be at least 512");
  return sector_energy<Scalar>(c, resolution, {-1, -1}) / (Scalar(resolution) * resolution);
}

// Splitting computed in double and in 50-digit arithmetic; `saturated` is
// set once the double result no longer carries two correct digits.
struct SplittingReport {
  double value_double = 0.0;
  double value = 0.0;   // high-precision value rounded to double
  bool saturated = false;
};
SplittingReport splitting_report(const Couplings& c, int n);

}  // namespace honeycomb

#endif  // HONEYCOMB_FREE_FERMION_HPP

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


#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "honeycomb/bounds.hpp"
#include "honeycomb/free_fermion.hpp"
#include "oracles/ed.hpp"

namespace honeycomb {
namespace {

constexpr Couplings kRef{0.1, 0.1, 0.5};
const double kPi = std::acos(-1.0);

Couplings random_gapped(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (;;) {
    const Couplings c{u(rng), u(rng), u(rng) * 3};
    if (c.gapped()) return c;
  }
}

TEST(FreeFermion, GappedPredicate) {
  EXPECT_TRUE(kRef.gapped());
  EXPECT_FALSE((Couplings{0.3, 0.3, 0.5}).gapped());
  EXPECT_FALSE((Couplings{0.1, 0.2, 0.5}).gapped());
  EXPECT_THROW((Couplings{0.3, 0.3, 0.5}).require_gapped(), std::domain_error);
  EXPECT_NO_THROW(kRef.require_gapped());
}

TEST(FreeFermion, ModeDataExamples) {
  const auto d = mode_data(Couplings{0, 0, 0.7}, 1.3, -0.4);
  EXPECT_DOUBLE_EQ(d.xi, 1.4);
  EXPECT_DOUBLE_EQ(d.delta_abs, 0.0);
  EXPECT_DOUBLE_EQ(d.energy, 1.4);
  EXPECT_DOUBLE_EQ(d.u, 1.0);
  EXPECT_DOUBLE_EQ(std::abs(d.v), 0.0);

  const auto pp = mode_data(kRef, kPi, kPi);
  EXPECT_NEAR(pp.xi, 2 * (0.5 - 0.2), 1e-15);
  EXPECT_NEAR(pp.delta_abs, 0.0, 1e-15);

  // xi = 2(0.5) + 0 = 1, |Delta| = 2(0.1 + 0.1) = 0.4.
  const auto h = mode_data(kRef, kPi / 2, kPi / 2);
  EXPECT_NEAR(h.xi, 1.0, 1e-15);
  EXPECT_NEAR(h.delta_abs, 0.4, 1e-15);
  EXPECT_NEAR(h.energy, std::sqrt(1.16), 1e-15);
  // |Delta|/Delta = -i for Delta = +0.4i.
  EXPECT_NEAR(h.v.real(), 0.0, 1e-15);
  EXPECT_LT(h.v.imag(), 0.0);
}

TEST(FreeFermion, BogoliubovNormalization) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> k(0, 2 * kPi);
  for (int ci = 0; ci < 1000; ++ci) {
    const Couplings c = random_gapped(rng);
    for (int j = 0; j < 100; ++j) {
      const auto d = mode_data(c, k(rng), k(rng));
      EXPECT_GT(d.energy, 0.0);
      ASSERT_NEAR(d.u * d.u + std::norm(d.v), 1.0, 1e-12);
    }
  }
}

TEST(FreeFermion, MinimumAtPiPi) {
  const double floor = 2 * (kRef.jz - kRef.jx - kRef.jy);
  EXPECT_NEAR(mode_energy(kRef, kPi, kPi), floor, 1e-15);
  double best = 1e9;
  for (int i = 0; i < 400; ++i)
    for (int j = 0; j < 400; ++j) best = std::min(best, mode_energy(kRef, 2 * kPi * i / 400, 2 * kPi * j / 400));
  EXPECT_NEAR(best, floor, 1e-12);
}

TEST(FreeFermion, ModeGrid) {
  for (int n : {2, 5, 8}) {
    for (auto l : kSectors) {
      const auto grid = mode_grid(n, l);
      ASSERT_EQ(grid.size(), static_cast<std::size_t>(n * n));
      std::set<std::pair<double, double>> distinct;
      for (const auto& k : grid) {
        EXPECT_GE(k.kx, 0.0);
        EXPECT_LT(k.kx, 2 * kPi + kPi / n);
        distinct.insert({k.kx, k.ky});
      }
      EXPECT_EQ(distinct.size(), grid.size());
    }
  }
  const auto pp = mode_grid(2, {1, 1});
  EXPECT_NEAR(pp[0].kx, kPi / 2, 1e-15);
  EXPECT_NEAR(pp[1].kx, 3 * kPi / 2, 1e-15);
  const auto mm = mode_grid(2, {-1, -1});
  EXPECT_NEAR(mm[0].kx, 0.0, 1e-15);
  EXPECT_NEAR(mm[1].kx, kPi, 1e-15);
}

TEST(FreeFermion, DecoupledLimit) {
  const Couplings c{0, 0, 0.8};
  for (int n : {2, 4, 10})
    for (auto l : kSectors) EXPECT_NEAR(sector_energy(c, n, l), -n * n * 0.8, 1e-12);
  EXPECT_NEAR(energy_density_limit(c, 512), -0.8, 1e-14);
  EXPECT_THROW(energy_density_limit(c, 256), std::invalid_argument);
}

TEST(FreeFermion, SumModesAgree) {
  for (int n : {4, 16, 40})
    for (auto l : kSectors) {
      const double a = sector_energy(kRef, n, l, Summation::pairwise);
      const double b = sector_energy(kRef, n, l, Summation::compensated);
      const double hp = static_cast<double>(sector_energy<HighPrecision>(kRef, n, l));
      EXPECT_NEAR(a, hp, 1e-12 * n * n);
      EXPECT_NEAR(b, hp, 1e-13 * n * n);
    }
}

TEST(FreeFermion, DensityConvergesMonotonically) {
  const double limit = energy_density_limit(kRef);
  double prev = 1e9;
  for (int n : {4, 8, 16, 32}) {
    const double err = std::abs(sector_energy(kRef, n, {1, 1}) / (n * n) - limit);
    EXPECT_LT(err, prev) << n;
    prev = err;
  }
  EXPECT_NEAR(energy_density_limit(kRef, 2048), limit, 1e-12);
}

TEST(FreeFermion, SplittingPositiveAndBounded) {
  for (int n = 2; n <= 64; n += 2) {
    const SplittingReport r = splitting_report(kRef, n);
    EXPECT_GT(r.value, 0.0) << n;
    EXPECT_LE(r.value, splitting_bound(kRef, n)) << n;
  }
  EXPECT_THROW(splitting(Couplings{0.3, 0.3, 0.5}, 4), std::domain_error);
  // Double precision runs out of digits well before n = 48.
  EXPECT_FALSE(splitting_report(kRef, 4).saturated);
  EXPECT_TRUE(splitting_report(kRef, 48).saturated);
}

TEST(FreeFermion, SplittingExponent) {
  // Least squares of ln splitting against n over even n in [8, 48].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int n = 8; n <= 48; n += 2) {
    const double y = std::log(splitting_report(kRef, n).value);
    sx += n;
    sy += y;
    sxx += double(n) * n;
    sxy += n * y;
    ++m;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  EXPECT_NEAR(-slope, std::log(4.0), 0.1 * std::log(4.0));
}

// Reference values from a 60-digit evaluation of the same mode sums,
// computed outside this code base.
TEST(FreeFermion, SplittingAgainstExtendedPrecision) {
  const std::pair<int, double> ref[] = {{8, 7.061195054e-6}, {16, 1.921885866e-11}, {24, 4.024063261e-17},
                                        {32, 5.446248064e-23}, {40, 5.003740501e-29}};
  for (const auto& [n, v] : ref) EXPECT_NEAR(splitting_report(kRef, n).value / v, 1.0, 1e-8) << n;
}

// The sector ground states of the 8-qubit spin model against the
// fermionic vacuum energies.
TEST(FreeFermion, ExactDiagonalizationAtTwo) {
  const auto sectors = oracle::vortex_free_sectors(kRef, 2);
  std::vector<double> ed, ff;
  for (const auto& s : sectors) ed.push_back(s.energy);
  for (auto l : kSectors) ff.push_back(sector_energy(kRef, 2, l));
  std::sort(ed.begin(), ed.end());
  std::sort(ff.begin(), ff.end());
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ed[i], ff[i], 1e-10);
  // Label convention: the spin sector l carries the vacuum of grid -l.
  for (const auto& s : sectors)
    EXPECT_NEAR(s.energy, sector_energy(kRef, 2, {-s.label.lx, -s.label.ly}), 1e-10) << to_string(s.label);
}

TEST(FreeFermion, LoopOperatorsAreInvolutions) {
  const auto g = build_lattice(2);
  const auto lo = logical_operators(g);
  for (const auto* p : {&lo.lx, &lo.ly}) {
    const auto m = oracle::pauli_matrix(*p);
    EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
    EXPECT_LT((m * m - oracle::Matrix::Identity(m.rows(), m.cols())).norm(), 1e-12);
  }
}

TEST(Bounds, ReferenceConstants) {
  const auto g = gap_constants(kRef);
  EXPECT_NEAR(g.a, std::log(4.0), 1e-15);
  EXPECT_NEAR(g.b, std::log(4.0), 1e-15);
  EXPECT_LE(g.Q + g.R, 4 * std::sqrt(2.0) * kRef.jz + 1e-15);
  EXPECT_NEAR(g.c, 4 * std::sqrt(2.0) / std::sinh(std::log(2.0)), 1e-12);
  EXPECT_NEAR(splitting_bound(kRef, 4), 0.5 * 16 * std::sqrt(2.0) * 16 / 255.0, 1e-12);
  EXPECT_NEAR(splitting_bound(kRef, 4), 0.7099, 1e-4);
  const auto d32 = indistinguishability_bound(kRef, 32);
  EXPECT_NEAR(d32.value, g.c * std::exp(-g.a * 8), 1e-15);
}

TEST(Bounds, CorrectabilityFormulas) {
  const auto g = gap_constants(kRef);
  double prev = 1e9;
  for (int n = 4; n <= 128; n += 4) {
    const auto e = correctability_bound(kRef, n);
    EXPECT_NEAR(e.value * e.value, 3 * g.c / 8 * std::exp(-g.a * n / 8), 1e-12 * e.value * e.value + 1e-300);
    EXPECT_LT(e.value, prev);
    prev = e.value;
  }
  const double an = std::log(4.0) * 64;
  const long expect = static_cast<long>(std::floor(std::min(an / (8 * std::log(4.0)), (an / 4) / std::log(an / 4 + 1))));
  EXPECT_EQ(correctability_bound(kRef, 64).max_volume, expect);
}

TEST(Bounds, GapClosesAtBoundary) {
  // a = ln((jz - jy)/jx) -> 0 as jx -> jz - jy.
  double prev = 1e9;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-5}) {
    const Couplings c{0.4 - eps, 0.1, 0.5};
    const double a = gap_constants(c).a;
    EXPECT_GT(a, 0.0);
    EXPECT_LT(a, prev);
    prev = a;
  }
  EXPECT_LT(prev, 1e-4);
  EXPECT_GT(splitting_bound(Couplings{0.4 - 1e-6, 0.1, 0.5}, 4), 1e4);
  EXPECT_THROW(gap_constants(Couplings{0.4, 0.1, 0.5}), std::domain_error);
}

TEST(Bounds, RandomGappedSample) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Couplings c = random_gapped(rng);
    const auto g = gap_constants(c);
    EXPECT_GT(g.a, 0.0);
    EXPECT_LE(g.a, g.b + 1e-15);
    EXPECT_LE(g.Q + g.R, 4 * std::sqrt(2.0) * c.jz * (1 + 1e-12));
    for (double v : {g.Q, g.R, g.c, splitting_bound(c, 8), indistinguishability_bound(c, 8).value,
                     correctability_bound(c, 8).value, string_lemma_bound(c, 8)})
      EXPECT_TRUE(std::isfinite(v) && v > 0);
  }
}

TEST(Bounds, SplittingBelowBoundOnGrid) {
  for (const Couplings c : {Couplings{0.1, 0.1, 0.5}, Couplings{0.2, 0.1, 0.5}, Couplings{0.3, 0.15, 0.5},
                            Couplings{0.05, 0.02, 0.3}})
    for (int n = 2; n <= 32; n += 2) EXPECT_LE(splitting_report(c, n).value, splitting_bound(c, n)) << n;
}

TEST(Bounds, QuadratureCertificates) {
  const Couplings zero{0, 0, 0.5};
  const auto z = quadrature_certificate(zero, 4);
  EXPECT_EQ(z.observed_error, 0.0);
  for (const Couplings c : {Couplings{0.1, 0.1, 0.5}, Couplings{0.2, 0.1, 0.5}, Couplings{0.3, 0.15, 0.5}})
    for (int n : {4, 8, 16}) EXPECT_TRUE(quadrature_certificate(c, n).ok) << n;
  // Consecutive observed errors fall off like e^{-4a}, up to a factor 10.
  const double a = gap_constants(kRef).a;
  const double e4 = quadrature_certificate(kRef, 4).observed_error;
  const double e8 = quadrature_certificate(kRef, 8).observed_error;
  const double ratio = e8 / e4 / std::exp(-4 * a);
  EXPECT_GT(ratio, 0.1);
  EXPECT_LT(ratio, 10.0);
}

}  // namespace
}  // namespace honeycomb

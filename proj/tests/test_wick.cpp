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

#include <gtest/gtest.h>

#include "honeycomb/bounds.hpp"
#include "honeycomb/wick.hpp"
#include "oracles/ed.hpp"
#include "oracles/exhaustive.hpp"

namespace honeycomb {
namespace {

constexpr Couplings kRef{0.1, 0.1, 0.5};

Endpoint random_endpoint(std::mt19937_64& rng, int span) {
  return {static_cast<int>(rng() % span), static_cast<int>(rng() % span), rng() & 1 ? 1 : -1};
}

TEST(Wick, EndpointExamples) {
  const auto kz = endpoints({{{2, 3, LinkAxis::z}}});
  ASSERT_EQ(kz.size(), 2u);
  EXPECT_EQ(kz[0], (Endpoint{2, 3, -1}));
  EXPECT_EQ(kz[1], (Endpoint{2, 3, 1}));
  EXPECT_TRUE(endpoints({{{1, 1, LinkAxis::x}, {1, 1, LinkAxis::x}}}).empty());
  const LinkOperator chain{{{0, 0, LinkAxis::x}, {1, 0, LinkAxis::z}, {1, 0, LinkAxis::x}}};
  EXPECT_TRUE(string_like(chain));
  const auto e = endpoints(chain);
  EXPECT_EQ(e[0], (Endpoint{0, 0, -1}));
  EXPECT_EQ(e[1], (Endpoint{2, 0, 1}));
}

TEST(Wick, PairCorrelatorExamples) {
  for (auto l : kSectors) {
    EXPECT_EQ(pair_correlator(kRef, 6, l, {0, 0, 1}, {2, 1, 1}), std::complex<double>(0.0));
    EXPECT_NEAR(std::abs(pair_correlator(kRef, 6, l, {3, 3, 1}, {3, 3, 1}) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(pair_correlator(kRef, 6, l, {3, 3, -1}, {3, 3, -1}) + 1.0), 0.0, 1e-12);
    // Decoupled dimers: the mixed coefficient is constant.
    const Couplings zero{0, 0, 0.5};
    EXPECT_NEAR(std::abs(pair_correlator(zero, 6, l, {1, 1, -1}, {1, 1, 1})), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(pair_correlator(zero, 6, l, {1, 1, -1}, {2, 1, 1})), 0.0, 1e-12);
    // <K^z> = 1 in the dimer limit.
    const std::vector<Endpoint> kz = {{1, 1, -1}, {1, 1, 1}};
    EXPECT_NEAR(link_expectation_magnitude(zero, 6, l, kz), 1.0, 1e-12);
  }
}

TEST(Wick, CorrelatorMagnitudeAtMostOne) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int t = 0; t < 300; ++t) {
    Couplings c{u(rng), u(rng), 3 * u(rng)};
    if (!c.gapped()) continue;
    const int n = 2 + 2 * static_cast<int>(rng() % 6);
    const auto l = kSectors[rng() % 4];
    EXPECT_LE(std::abs(pair_correlator(c, n, l, random_endpoint(rng, n), random_endpoint(rng, n))), 1.0 + 1e-12);
  }
}

TEST(Wick, PairingSumMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int m = 1; m <= 4; ++m)
    for (int t = 0; t < 40; ++t) {
      const int n = 8;
      const auto l = kSectors[rng() % 4];
      std::vector<Endpoint> eps;
      for (int i = 0; i < 2 * m; ++i) eps.push_back(random_endpoint(rng, 4));
      // Include same-s pairs at equal sites now and then so the full
      // recursion path is exercised too.
      if (t % 5 == 0) eps[1] = eps[0];
      std::vector<std::vector<std::complex<double>>> g(2 * m, std::vector<std::complex<double>>(2 * m));
      for (int i = 0; i < 2 * m; ++i)
        for (int j = i + 1; j < 2 * m; ++j) g[i][j] = pair_correlator(kRef, n, l, eps[i], eps[j]);
      const auto expect = oracle::brute_force_pairings(g);
      EXPECT_NEAR(std::abs(wick_value(kRef, n, l, eps) - expect), 0.0, 1e-10) << m << " " << t;
    }
}

TEST(Wick, Rejections) {
  const std::vector<Endpoint> odd = {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}};
  EXPECT_THROW(wick_value(kRef, 8, {1, 1}, odd), std::invalid_argument);
  std::vector<Endpoint> big;
  for (int i = 0; i < 18; ++i) big.push_back({i % 3, i / 3, i % 2 ? 1 : -1});
  EXPECT_THROW(wick_value(kRef, 8, {1, 1}, big), std::invalid_argument);
  const std::vector<Endpoint> far = {{0, 0, -1}, {4, 0, 1}};
  EXPECT_THROW(sector_gap(kRef, 8, far), std::invalid_argument);
  EXPECT_NO_THROW(sector_gap(kRef, 9, far));
}

TEST(Wick, SectorGapExamples) {
  const std::vector<Endpoint> string = {{0, 0, -1}, {3, 2, 1}};
  EXPECT_EQ(sector_gap(Couplings{0, 0, 0.5}, 16, string).gap, 0.0);
  const auto s = sector_gap(kRef, 16, string);
  EXPECT_EQ(s.pairs, 1);
  EXPECT_NEAR(s.lemma_bound, string_lemma_bound(kRef, 16), 0.0);
  EXPECT_TRUE(s.ok);
  const std::vector<Endpoint> two = {{0, 0, -1}, {3, 2, 1}, {1, 4, -1}, {5, 5, 1}};
  const auto g = sector_gap(kRef, 16, two);
  EXPECT_EQ(g.pairs, 2);
  EXPECT_NEAR(g.lemma_bound, general_lemma_bound(kRef, 16, 2), 0.0);
  EXPECT_TRUE(g.ok);
}

TEST(Wick, RandomStringsRespectLemma) {
  std::mt19937_64 rng(13);
  for (int n : {8, 16, 24}) {
    const int reach = (n - 1) / 2;
    for (int t = 0; t < 50; ++t) {
      const Endpoint a{0, 0, rng() & 1 ? 1 : -1};
      const Endpoint b{static_cast<int>(rng() % (2 * reach + 1)) - reach,
                       static_cast<int>(rng() % (2 * reach + 1)) - reach, -a.s};
      const std::vector<Endpoint> eps = {a, b};
      EXPECT_TRUE(sector_gap(kRef, n, eps).ok) << n;
    }
  }
}

// Strings whose length grows with the torus: the gap falls off like
// e^{-(a/2) n} up to polynomial factors.
TEST(Wick, SeparationScaledGapExponent) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int n : {8, 16, 24, 32}) {
    const std::vector<Endpoint> eps = {{0, 0, -1}, {(n - 2) / 2, 0, 1}};
    const double y = std::log(sector_gap(kRef, n, eps).gap);
    sx += n;
    sy += y;
    sxx += double(n) * n;
    sxy += n * y;
    ++m;
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double half_a = gap_constants(kRef).a / 2;
  EXPECT_NEAR(-slope, half_a, 0.25 * half_a);
}

// At n = 2 the magnitudes agree with the 256-dimensional spin ground states.
// The spin sector l pairs with the fermion grid -l.
TEST(Wick, ExactDiagonalizationAtTwo) {
  const auto g = build_lattice(2);
  const auto sectors = oracle::vortex_free_sectors(kRef, 2);
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    LinkOperator op;
    PauliOperator p(8);
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      const LinkGenerator lg{static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), static_cast<LinkAxis>(rng() % 3)};
      op.generators.push_back(lg);
      p *= link_pauli(g, lg);
    }
    const auto eps = endpoints(op);
    if (eps.empty()) continue;
    for (const auto& s : sectors) {
      const double ed = std::abs(oracle::expectation(s.state, p));
      const SectorLabel l{-s.label.lx, -s.label.ly};
      EXPECT_NEAR(link_expectation_magnitude(kRef, 2, l, eps, MixedSign::plus_first), ed, 1e-8);
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

}  // namespace
}  // namespace honeycomb

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
#include <cstdlib>
#include <fstream>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "honeycomb/harness.hpp"

namespace honeycomb {
namespace {

ErrorRateCurve synthetic(int n, double beta, const std::vector<double>& ts, const std::vector<double>& ps,
                         long trials = 100000) {
  ErrorRateCurve c{n, beta, {}};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const long f = std::lround(ps[i] * trials);
    c.points.push_back({ts[i], trials, f, static_cast<double>(f) / trials, wilson_interval(f, trials)});
  }
  return c;
}

double logistic(double x) { return 1 / (1 + std::exp(-x)); }

TEST(Harness, WilsonInterval) {
  const auto zero = wilson_interval(0, 0);
  EXPECT_EQ(zero.lo, 0.0);
  EXPECT_EQ(zero.hi, 1.0);
  // 10 of 100: closed form of the score interval.
  const double z = 1.959963984540054, p = 0.1, n = 100;
  const double centre = (p + z * z / (2 * n)) / (1 + z * z / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / (1 + z * z / n);
  const auto w = wilson_interval(10, 100);
  EXPECT_NEAR(w.lo, centre - half, 1e-12);
  EXPECT_NEAR(w.hi, centre + half, 1e-12);
  const auto all = wilson_interval(50, 50);
  EXPECT_LE(all.hi, 1.0);
  EXPECT_GT(all.lo, 0.9);
  EXPECT_EQ(wilson_interval(0, 50).lo, 0.0);
}

TEST(Harness, SyntheticCrossingRecovered) {
  std::vector<double> ts, small, large;
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.1 * k;
    ts.push_back(t);
    // Logits are straight lines meeting at t = 1.23.
    small.push_back(logistic(2.0 * (t - 1.23)));
    large.push_back(logistic(5.0 * (t - 1.23)));
  }
  const auto cross = estimate_crossings({synthetic(8, 1.0, ts, small), synthetic(12, 1.0, ts, large)});
  ASSERT_EQ(cross.size(), 1u);
  EXPECT_EQ(cross[0].n_small, 8);
  EXPECT_EQ(cross[0].n_large, 12);
  EXPECT_NEAR(cross[0].t, 1.23, 0.01);
  EXPECT_LE(cross[0].lo, cross[0].t);
  EXPECT_GE(cross[0].hi, cross[0].t);
  EXPECT_LT(cross[0].hi - cross[0].lo, 0.05);
}

TEST(Harness, IdenticalCurvesDoNotCross) {
  const std::vector<double> ts = {1, 2, 3, 4}, ps = {0.1, 0.2, 0.3, 0.4};
  EXPECT_TRUE(estimate_crossings({synthetic(8, 1.0, ts, ps), synthetic(12, 1.0, ts, ps)}).empty());
  // Different betas are never compared.
  EXPECT_TRUE(estimate_crossings({synthetic(8, 1.0, ts, ps), synthetic(12, 2.0, ts, {0.0, 0.1, 0.5, 0.9})}).empty());
}

TEST(Harness, ExponentialFitRecovered) {
  std::vector<std::pair<double, double>> pts;
  for (double b : {1.0, 2.0, 3.0, 4.0, 5.0}) pts.push_back({b, 0.7 * std::exp(0.9 * b)});
  const auto fit = fit_lifetime_scaling(pts);
  EXPECT_EQ(fit.model, ScalingModel::exponential);
  EXPECT_NEAR(fit.exp_rate, 0.9, 0.009);
  EXPECT_NEAR(std::exp(fit.exp_log_prefactor), 0.7, 0.007);
  EXPECT_NEAR(fit.exp_r2, 1.0, 1e-12);
  EXPECT_EQ(to_string(fit.model), "exponential");
}

TEST(Harness, LinearFitRecovered) {
  std::vector<std::pair<double, double>> pts;
  for (double b : {1.0, 7.0, 20.0, 40.0}) pts.push_back({b, 0.14 * b + 0.05});
  const auto fit = fit_lifetime_scaling(pts);
  EXPECT_EQ(fit.model, ScalingModel::linear);
  EXPECT_NEAR(fit.linear_slope, 0.14, 1e-12);
  EXPECT_NEAR(fit.linear_intercept, 0.05, 1e-12);
}

TEST(Harness, FitRejectsDegenerateInput) {
  EXPECT_THROW(fit_lifetime_scaling({{1, 1}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(fit_lifetime_scaling({{1, 1}, {2, -2}, {3, 3}}), std::invalid_argument);
  EXPECT_THROW(fit_lifetime_scaling({{1, 1}, {1, 2}, {1, 3}}), std::invalid_argument);
}

Campaign small_campaign() {
  Campaign c;
  c.sizes = {4, 6};
  c.betas = {1.0};
  c.times = {0.02, 0.05, 0.1};
  c.trajectories = 200;
  c.mode = NoiseMode::ultra_high_depolarizing;
  c.seed = 42;
  return c;
}

TEST(Harness, ZeroTrajectories) {
  Campaign c = small_campaign();
  c.trajectories = 0;
  const auto r = run_campaign(c, 2);
  for (const auto& curve : r.curves)
    for (const auto& p : curve.points) EXPECT_EQ(p.trials, 0);
  EXPECT_EQ(r.projected_events, 0.0);
}

TEST(Harness, ReproducibleAcrossWorkerCounts) {
  const Campaign c = small_campaign();
  const auto a = run_campaign(c, 1);
  const auto b = run_campaign(c, 3);
  EXPECT_EQ(a.failure_bits, b.failure_bits);
  ASSERT_EQ(a.curves.size(), 2u);
  for (std::size_t i = 0; i < a.curves.size(); ++i)
    for (std::size_t k = 0; k < a.curves[i].points.size(); ++k)
      EXPECT_EQ(a.curves[i].points[k].failures, b.curves[i].points[k].failures);
  Campaign d = c;
  d.seed = 43;
  EXPECT_NE(run_campaign(d, 2).failure_bits, a.failure_bits);
}

TEST(Harness, CurvesMonotoneAndCalibrated) {
  Campaign c = small_campaign();
  c.trajectories = 1500;
  c.times = {0.01, 0.03, 0.06, 0.1, 0.2};
  const auto r = run_campaign(c, 2);
  for (const auto& curve : r.curves)
    for (std::size_t k = 1; k < curve.points.size(); ++k)
      EXPECT_GE(curve.points[k].ci.hi, curve.points[k - 1].ci.lo);
  for (const auto& s : r.stats) {
    EXPECT_NEAR(s.per_qubit_rate() * s.beta / 3.0, 1.0, 0.02);
    EXPECT_EQ(s.letter_counts[0], 0u);
  }
}

TEST(Harness, BudgetGuardAndValidation) {
  Campaign c = small_campaign();
  c.event_budget = 10;
  try {
    run_campaign(c, 1);
    FAIL() << "expected the budget guard";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("projected"), std::string::npos) << e.what();
  }
  EXPECT_NEAR(projected_event_count(small_campaign()), 200.0 * (0.02 + 0.05 + 0.1) * 3 * (32 + 72), 1e-6);
  Campaign bad = small_campaign();
  bad.sizes = {5};
  EXPECT_THROW(run_campaign(bad, 1), std::invalid_argument);
  bad = small_campaign();
  bad.times = {0.1, 0.05};
  EXPECT_THROW(run_campaign(bad, 1), std::invalid_argument);
}

TEST(Harness, WorkersFromEnvironment) {
  const char* old = std::getenv("HQEC_WORKERS");
  const std::string saved = old ? old : "";
  setenv("HQEC_WORKERS", "3", 1);
  EXPECT_EQ(workers_from_env(), 3);
  setenv("HQEC_WORKERS", "zero", 1);
  EXPECT_THROW(workers_from_env(), std::invalid_argument);
  setenv("HQEC_WORKERS", "0", 1);
  EXPECT_THROW(workers_from_env(), std::invalid_argument);
  unsetenv("HQEC_WORKERS");
  EXPECT_GE(workers_from_env(), 1);
  if (old) setenv("HQEC_WORKERS", saved.c_str(), 1);
}

TEST(Harness, CsvAndMetadata) {
  const auto dir = std::filesystem::temp_directory_path() / "hqec_harness_test";
  std::filesystem::remove_all(dir);
  const auto csv = dir / "sub" / "x.csv";
  write_csv(csv, {"a", "b"}, {{"1", "2"}, {"3", format_double(0.1)}});
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,b");
  std::getline(in, line);
  EXPECT_EQ(line, "1,2");
  std::getline(in, line);
  EXPECT_EQ(line, "3,0.1");
  EXPECT_THROW(write_csv(csv, {"a", "b"}, {{"1"}}), std::logic_error);

  write_metadata(csv, 99, "{\"k\":1}", "prov", 1.5);
  std::ifstream meta(dir / "sub" / "x.meta.json");
  const auto j = nlohmann::json::parse(meta);
  EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 99u);
  EXPECT_EQ(j.at("config_hash").get<std::string>().size(), 16u);
  EXPECT_EQ(j.at("coefficient_provenance").get<std::string>(), "prov");
  EXPECT_DOUBLE_EQ(j.at("wall_time_seconds").get<double>(), 1.5);
  EXPECT_NE(fnv1a("a"), fnv1a("b"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace honeycomb

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

#ifndef HONEYCOMB_HARNESS_HPP
#define HONEYCOMB_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "honeycomb/thermal.hpp"

namespace honeycomb {

struct Campaign {
  std::vector<int> sizes;
  std::vector<double> betas;
  std::vector<double> times;   // decode times; multiplied by beta when times_in_beta
  bool times_in_beta = true;
  long trajectories = 0;       // per (n, beta, t)
  NoiseMode mode = NoiseMode::spin_boson;
  Couplings couplings{0.1, 0.1, 0.5};
  std::optional<EffectiveCoefficients> coefficients;  // default_coefficients when empty
  Orientation orientation = Orientation::rotated45;
  std::uint64_t seed = 0;
  double event_budget = 2e10;  // projected events allowed before refusing
  // Variance reduction: decode one trajectory at every t instead of fresh
  // trajectories per t. Off by default.
  bool snapshot_reuse = false;
  long density_trajectories = 0;  // per (n, beta), sampled to the last t
  int density_samples = 50;

  EffectiveCoefficients resolved_coefficients() const;
  double absolute_time(double t, double beta) const { return times_in_beta ? t * beta : t; }
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};
// 95% Wilson score interval; [0, 1] for zero trials.
WilsonInterval wilson_interval(long failures, long trials, double z = 1.959963984540054);

struct CurvePoint {
  double t = 0.0;  // absolute time
  long trials = 0;
  long failures = 0;
  double p = 0.0;
  WilsonInterval ci;
};

struct ErrorRateCurve {
  int n = 0;
  double beta = 0.0;
  std::vector<CurvePoint> points;
};

// Per (n, beta) bookkeeping over every simulated trajectory.
struct PointStats {
  int n = 0;
  double beta = 0.0;
  std::uint64_t events = 0;
  std::array<std::uint64_t, 4> letter_counts{};
  double qubit_time = 0.0;      // sum over trajectories of qubits * t
  long row_parity_violations = 0;  // final frames with an odd vortex count on a frame row
  long trajectories = 0;
  double per_qubit_rate() const { return qubit_time > 0 ? static_cast<double>(events) / qubit_time : 0.0; }
};

struct DensitySeries {
  int n = 0;
  double beta = 0.0;
  std::vector<DensityPoint> points;
};

struct CampaignResult {
  std::vector<ErrorRateCurve> curves;
  std::vector<std::vector<std::uint8_t>> failure_bits;  // per curve point, in trajectory order
  std::vector<PointStats> stats;
  std::vector<DensitySeries> density;
  double projected_events = 0.0;
  double wall_seconds = 0.0;
};

// HQEC_WORKERS, defaulting to the hardware concurrency (at least 1).
int workers_from_env();

// Ground-state total rate * t summed over all work; used by the budget guard.
double projected_event_count(const Campaign& cfg);

// Throws std::runtime_error with the estimate when the projection exceeds
// cfg.event_budget, std::invalid_argument for a malformed campaign.
CampaignResult run_campaign(const Campaign& cfg, int workers = workers_from_env());

struct Crossing {
  int n_small = 0;
  int n_large = 0;
  double beta = 0.0;
  double t = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// First sign change of logit(p_large) - logit(p_small) on the shared time
// grid, linearly interpolated, for every pair of sizes at equal beta. Pairs
// that never cross are omitted. The interval comes from a parametric
// bootstrap of the binomial counts.
std::vector<Crossing> estimate_crossings(const std::vector<ErrorRateCurve>& curves, int resamples = 1000,
                                         std::uint64_t seed = 0xc1055ULL);

enum class ScalingModel { linear, exponential };
std::string to_string(ScalingModel m);

struct ScalingFit {
  ScalingModel model = ScalingModel::linear;
  double linear_slope = 0.0, linear_intercept = 0.0, linear_r2 = 0.0;
  double exp_rate = 0.0, exp_log_prefactor = 0.0, exp_r2 = 0.0;  // ln t_c = rate * beta + log_prefactor
};

// Fits t_c = A beta + B and ln t_c = A beta + B, selecting the higher R^2.
// Throws std::invalid_argument for fewer than 3 points, non-positive t_c or
// a single distinct beta.
ScalingFit fit_lifetime_scaling(const std::vector<std::pair<double, double>>& points);

// Output helpers shared by the CLI.
std::uint64_t fnv1a(const std::string& text);
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
// Writes <csv stem>.meta.json beside the CSV.
void write_metadata(const std::filesystem::path& csv_path, std::uint64_t seed, const std::string& config_text,
                    const std::string& provenance, double wall_seconds);
std::string format_double(double v);

}  // namespace honeycomb

#endif  // HONEYCOMB_HARNESS_HPP

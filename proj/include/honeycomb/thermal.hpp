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

#ifndef HONEYCOMB_THERMAL_HPP
#define HONEYCOMB_THERMAL_HPP

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "honeycomb/effective_energy.hpp"
#include "honeycomb/syndrome.hpp"

namespace honeycomb {

enum class NoiseMode { spin_boson, ultra_high_depolarizing };

std::string to_string(NoiseMode m);
NoiseMode noise_mode_from_string(const std::string& s);

struct ThermalConfig {
  double beta = 1.0;
  double t_max = 1.0;
  NoiseMode mode = NoiseMode::spin_boson;
  std::uint64_t seed = 0;
  bool record_density = false;
  double density_sample_interval = 0.0;
  bool record_events = false;
};

struct ErrorEvent {
  double time = 0.0;
  int qubit = 0;
  Letter letter = Letter::I;
};

struct DecodeSummary {
  bool decoded = false;
  bool success = false;
  int logical_class = 0;
  long matching_weight = 0;
};

struct TrajectoryRecord {
  std::vector<ErrorEvent> events;  // only filled with record_events
  SyndromeFrame final_frame;
  std::vector<std::array<double, 2>> density;  // (time, broken-dimer fraction)
  DecodeSummary decode;
  std::uint64_t seed = 0;
  std::uint64_t event_count = 0;
  std::array<std::uint64_t, 4> letter_counts{};  // indexed by Letter
};

// gamma = delta / (1 - e^{-beta delta}); delta > 0 lowers the energy.
double rate(double delta, double beta);

// Per-trajectory stream seed: splitmix64 of (master + golden * (index + 1)).
std::uint64_t trajectory_seed(std::uint64_t master, std::uint64_t index);
std::uint64_t splitmix64(std::uint64_t x);

// Exact event-driven sampler of the single-qubit Pauli jump process.
class ThermalChain {
 public:
  ThermalChain(const LatticeGeom& geom, const Couplings& c, const EffectiveCoefficients& coeff,
               NoiseMode mode, double beta, std::uint64_t seed);

  // Draws the next event; if it would land after t_limit the clock is set to
  // t_limit and false is returned (the exponential clock is memoryless).
  bool step(double t_limit, ErrorEvent* out = nullptr);
  void advance_to(double t);

  const SyndromeFrame& frame() const { return frame_; }
  double clock() const { return frame_.clock(); }
  double total_rate() const;
  double recomputed_total_rate() const;
  // Largest |cached - fresh| rate over all events.
  double max_rate_mismatch() const;
  double event_rate(int event) const;
  std::uint64_t event_count() const { return events_; }
  const std::array<std::uint64_t, 4>& letter_counts() const { return letter_counts_; }
  int event_slots() const { return slots_; }

 private:
  double fresh_rate(int event) const;
  void set_leaf(int event, double r);
  int sample_event(double u) const;
  double uniform();
  void refresh_after(int qubit, Letter l);

  LatticeGeom geom_;
  Couplings c_;
  EffectiveCoefficients coeff_;
  NoiseMode mode_;
  double beta_;
  SyndromeFrame frame_;
  std::mt19937_64 rng_;
  int slots_;
  int leaves_;
  std::vector<double> tree_;
  std::vector<std::vector<int>> plaquette_dependents_;
  std::vector<int> stamp_;
  int stamp_counter_ = 0;
  std::vector<int> dirty_;
  std::array<double, 27> pattern_rate_{};
  bool use_pattern_cache_;
  std::uint64_t events_ = 0;
  std::array<std::uint64_t, 4> letter_counts_{};
};

TrajectoryRecord simulate_trajectory(const LatticeGeom& geom, const Couplings& c,
                                     const EffectiveCoefficients& coeff, const ThermalConfig& cfg);

struct DensityPoint {
  double time = 0.0;
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// Pointwise mean with a 95% bootstrap interval (1000 resamples, fixed seed).
// Throws std::invalid_argument on empty input or mismatched sample grids.
std::vector<DensityPoint> dimer_density_stats(std::span<const TrajectoryRecord> records);

}  // namespace honeycomb

#endif  // HONEYCOMB_THERMAL_HPP

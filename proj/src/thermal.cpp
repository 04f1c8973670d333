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

#include "honeycomb/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace honeycomb {

namespace {

constexpr std::array<Letter, 3> kEventLetters = {Letter::X, Letter::Y, Letter::Z};

int event_of(int qubit, Letter l) {
  switch (l) {
    case Letter::X: return 3 * qubit;
    case Letter::Y: return 3 * qubit + 1;
    default: return 3 * qubit + 2;
  }
}

int w_code(int w) { return w > 0 ? 1 : 2; }

int pattern_of(const SyndromeFrame& f, int qubit, Letter l) {
  const FlipSet& fs = f.geom().flip_set(qubit, l);
  int k = fs.flips_kappa ? w_code(f.kappa(qubit >> 1)) : 0;
  int a = fs.count > 0 ? w_code(f.w(fs.plaquettes[0])) : 0;
  int b = fs.count > 1 ? w_code(f.w(fs.plaquettes[1])) : 0;
  return 9 * k + 3 * a + b;
}

}  // namespace

std::string to_string(NoiseMode m) {
  return m == NoiseMode::spin_boson ? "spin_boson" : "ultra_high_depolarizing";
}

NoiseMode noise_mode_from_string(const std::string& s) {
  if (s == "spin_boson") return NoiseMode::spin_boson;
  if (s == "ultra_high_depolarizing" || s == "ultra_high") return NoiseMode::ultra_high_depolarizing;
  throw std::invalid_argument("unknown noise mode '" + s + "' (expected spin_boson or ultra_high_depolarizing)");
}

double rate(double delta, double beta) {
  if (!(beta > 0)) throw std::invalid_argument("rate: beta must be positive");
  const double x = beta * delta;
  if (std::abs(x) < 1e-8) return (1.0 + x / 2 + x * x / 12) / beta;
  if (x > 700) return delta;
  if (x < -700) return -delta * std::exp(x);
  return delta / -std::expm1(-x);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trajectory_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

ThermalChain::ThermalChain(const LatticeGeom& geom, const Couplings& c, const EffectiveCoefficients& coeff,
                           NoiseMode mode, double beta, std::uint64_t seed)
    : geom_(geom),
      c_(c),
      coeff_(coeff),
      mode_(mode),
      beta_(beta),
      frame_(geom),
      rng_(seed),
      slots_(3 * geom.qubit_count()),
      use_pattern_cache_(coeff.corrections.empty()) {
  if (!(beta > 0)) throw std::invalid_argument("ThermalChain: beta must be positive");
  leaves_ = 1;
  while (leaves_ < slots_) leaves_ <<= 1;
  tree_.assign(2 * static_cast<std::size_t>(leaves_), 0.0);
  stamp_.assign(static_cast<std::size_t>(slots_), 0);

  if (mode_ == NoiseMode::spin_boson) {
    const double mj = coeff_.mu * c_.jz;
    for (int k = 0; k < 3; ++k)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          auto val = [](int code) { return code == 0 ? 0 : (code == 1 ? 1 : -1); };
          const double d = -2 * mj * val(k) - 2 * coeff_.c4 * (val(a) + val(b));
          pattern_rate_[9 * k + 3 * a + b] = rate(d, beta_);
        }

    plaquette_dependents_.assign(static_cast<std::size_t>(geom.dimer_count()), {});
    for (int q = 0; q < geom.qubit_count(); ++q) {
      for (Letter l : kEventLetters) {
        const FlipSet& fs = geom.flip_set(q, l);
        std::vector<int> deps(fs.plaquettes.begin(), fs.plaquettes.begin() + fs.count);
        for (const auto& term : coeff_.corrections) {
          for (int i = 0; i < fs.count; ++i) {
            const DimerSite s = geom.dimer_at(fs.plaquettes[i]);
            for (const auto& o : term.offsets)
              for (const auto& o2 : term.offsets) deps.push_back(geom.dimer_index(s.qx - o[0] + o2[0], s.qy - o[1] + o2[1]));
          }
        }
        std::sort(deps.begin(), deps.end());
        deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
        for (int r : deps) plaquette_dependents_[r].push_back(event_of(q, l));
      }
    }
  }
  for (int e = 0; e < slots_; ++e) tree_[leaves_ + e] = fresh_rate(e);
  for (int i = leaves_ - 1; i >= 1; --i) tree_[i] = tree_[2 * i] + tree_[2 * i + 1];
}

double ThermalChain::fresh_rate(int event) const {
  if (mode_ == NoiseMode::ultra_high_depolarizing) return 1.0 / beta_;
  const int qubit = event / 3;
  const Letter l = kEventLetters[event % 3];
  if (use_pattern_cache_) return pattern_rate_[pattern_of(frame_, qubit, l)];
  return rate(error_delta(frame_, qubit, l, coeff_, c_), beta_);
}

void ThermalChain::set_leaf(int event, double r) {
  int i = leaves_ + event;
  tree_[i] = r;
  for (i >>= 1; i >= 1; i >>= 1) tree_[i] = tree_[2 * i] + tree_[2 * i + 1];
}

int ThermalChain::sample_event(double u) const {
  double target = u * tree_[1];
  int i = 1;
  while (i < leaves_) {
    const double left = tree_[2 * i];
    if (target < left || tree_[2 * i + 1] <= 0.0) {
      i = 2 * i;
    } else {
      target -= left;
      i = 2 * i + 1;
    }
  }
  int e = std::min(i - leaves_, slots_ - 1);
  // Rounding at the far edge of the cumulative sum can land on an empty leaf.
  while (e > 0 && tree_[leaves_ + e] <= 0.0) --e;
  while (e < slots_ - 1 && tree_[leaves_ + e] <= 0.0) ++e;
  return e;
}

double ThermalChain::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

double ThermalChain::total_rate() const { return tree_[1]; }

double ThermalChain::recomputed_total_rate() const {
  double s = 0.0;
  for (int e = 0; e < slots_; ++e) s += fresh_rate(e);
  return s;
}

double ThermalChain::max_rate_mismatch() const {
  double worst = 0.0;
  for (int e = 0; e < slots_; ++e) worst = std::max(worst, std::abs(tree_[leaves_ + e] - fresh_rate(e)));
  return worst;
}

double ThermalChain::event_rate(int event) const { return tree_[leaves_ + event]; }

void ThermalChain::refresh_after(int qubit, Letter l) {
  if (mode_ == NoiseMode::ultra_high_depolarizing) return;
  const FlipSet& fs = geom_.flip_set(qubit, l);
  ++stamp_counter_;
  dirty_.clear();
  auto mark = [&](int e) {
    if (stamp_[e] != stamp_counter_) {
      stamp_[e] = stamp_counter_;
      dirty_.push_back(e);
    }
  };
  for (int i = 0; i < fs.count; ++i)
    for (int e : plaquette_dependents_[fs.plaquettes[i]]) mark(e);
  if (fs.flips_kappa) {
    const int d = qubit >> 1;
    for (int leg = 0; leg < 2; ++leg) {
      mark(event_of(2 * d + leg, Letter::X));
      mark(event_of(2 * d + leg, Letter::Y));
    }
  }
  for (int e : dirty_) set_leaf(e, fresh_rate(e));
}

bool ThermalChain::step(double t_limit, ErrorEvent* out) {
  const double total = tree_[1];
  if (!(total > 0.0)) {
    frame_.set_clock(std::max(frame_.clock(), t_limit));
    return false;
  }
  const double dt = -std::log1p(-uniform()) / total;
  const double t = frame_.clock() + dt;
  if (t > t_limit) {
    frame_.set_clock(t_limit);
    return false;
  }
  int e;
  if (mode_ == NoiseMode::ultra_high_depolarizing) {
    e = std::min(static_cast<int>(uniform() * slots_), slots_ - 1);
  } else {
    e = sample_event(uniform());
  }
  const int qubit = e / 3;
  const Letter l = kEventLetters[e % 3];
  frame_.apply_letter(qubit, l);
  frame_.set_clock(t);
  refresh_after(qubit, l);
  ++events_;
  ++letter_counts_[static_cast<unsigned>(l)];
  if (out) *out = {t, qubit, l};
  return true;
}

void ThermalChain::advance_to(double t) {
  while (step(t)) {
  }
}

TrajectoryRecord simulate_trajectory(const LatticeGeom& geom, const Couplings& c,
                                     const EffectiveCoefficients& coeff, const ThermalConfig& cfg) {
  if (!(cfg.beta > 0) || !(cfg.t_max > 0)) throw std::invalid_argument("simulate_trajectory: beta and t_max must be positive");
  ThermalChain chain(geom, c, coeff, cfg.mode, cfg.beta, cfg.seed);
  TrajectoryRecord rec{{}, SyndromeFrame(geom), {}, {}, cfg.seed, 0, {}};
  ErrorEvent ev;
  auto run_until = [&](double t) {
    while (chain.step(t, &ev))
      if (cfg.record_events) rec.events.push_back(ev);
  };
  // Stopping the clock at sample times is exact: waiting times are memoryless.
  if (cfg.record_density && cfg.density_sample_interval > 0) {
    for (long k = 0;; ++k) {
      const double ts = static_cast<double>(k) * cfg.density_sample_interval;
      if (ts > cfg.t_max * (1 + 1e-12)) break;
      run_until(std::min(ts, cfg.t_max));
      rec.density.push_back({ts, chain.frame().dimer_density()});
    }
  }
  run_until(cfg.t_max);
  rec.final_frame = chain.frame();
  rec.event_count = chain.event_count();
  rec.letter_counts = chain.letter_counts();
  return rec;
}

std::vector<DensityPoint> dimer_density_stats(std::span<const TrajectoryRecord> records) {
  if (records.empty()) throw std::invalid_argument("dimer_density_stats: no records");
  const std::size_t len = records.front().density.size();
  for (const auto& r : records)
    if (r.density.size() != len) throw std::invalid_argument("dimer_density_stats: records use different sample grids");
  std::vector<DensityPoint> out;
  std::mt19937_64 rng(0x5eedULL);
  const std::size_t m = records.size();
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::vector<double> means(1000);
  for (std::size_t i = 0; i < len; ++i) {
    double s = 0.0;
    for (const auto& r : records) s += r.density[i][1];
    DensityPoint p;
    p.time = records.front().density[i][0];
    p.mean = s / static_cast<double>(m);
    for (auto& bm : means) {
      double t = 0.0;
      for (std::size_t k = 0; k < m; ++k) t += records[pick(rng)].density[i][1];
      bm = t / static_cast<double>(m);
    }
    std::sort(means.begin(), means.end());
    p.lo = means[24];
    p.hi = means[974];
    out.push_back(p);
  }
  return out;
}

}  // namespace honeycomb

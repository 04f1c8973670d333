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

#include "honeycomb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "honeycomb/decoder.hpp"

namespace honeycomb {

namespace {

void parallel_for(long count, int workers, const std::function<void(long)>& body) {
  if (count <= 0) return;
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<long>(count, 1 << 20))));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (long i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

bool rows_pair_up(const SyndromeFrame& f) {
  const LatticeGeom& g = f.geom();
  std::vector<int> count(static_cast<std::size_t>(g.n()), 0);
  for (int p = 0; p < g.dimer_count(); ++p)
    if (f.w(p) < 0) ++count[g.frame_row(g.dimer_at(p))];
  return std::all_of(count.begin(), count.end(), [](int c) { return c % 2 == 0; });
}

void validate(const Campaign& cfg) {
  if (cfg.trajectories < 0) throw std::invalid_argument("campaign: negative trajectory count");
  for (int n : cfg.sizes)
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("campaign: lattice sizes must be even and >= 2");
  for (double b : cfg.betas)
    if (!(b > 0)) throw std::invalid_argument("campaign: beta must be positive");
  for (double t : cfg.times)
    if (!(t > 0)) throw std::invalid_argument("campaign: decode times must be positive");
  if (!std::is_sorted(cfg.times.begin(), cfg.times.end()))
    throw std::invalid_argument("campaign: time grid must be increasing");
}

double logit(long f, long n) {
  const double p = (static_cast<double>(f) + 0.5) / (static_cast<double>(n) + 1.0);
  return std::log(p / (1 - p));
}

std::optional<double> first_crossing(const std::vector<double>& t, const std::vector<double>& d) {
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (d[i] == 0.0 && d[i + 1] == 0.0) continue;
    if ((d[i] < 0 && d[i + 1] >= 0) || (d[i] > 0 && d[i + 1] <= 0)) {
      if (d[i + 1] == 0.0 && i + 2 < t.size() && d[i + 2] * d[i] > 0) continue;  // touch, not cross
      const double f = d[i] / (d[i] - d[i + 1]);
      return t[i] + f * (t[i + 1] - t[i]);
    }
  }
  return std::nullopt;
}

}  // namespace

EffectiveCoefficients Campaign::resolved_coefficients() const {
  return coefficients ? *coefficients : default_coefficients(couplings);
}

WilsonInterval wilson_interval(long failures, long trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  // The endpoints are exact at p = 0 and p = 1; keep roundoff out of them.
  const double lo = failures == 0 ? 0.0 : std::max(0.0, centre - half);
  const double hi = failures == trials ? 1.0 : std::min(1.0, centre + half);
  return {lo, hi};
}

int workers_from_env() {
  if (const char* s = std::getenv("HQEC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 1) throw std::invalid_argument(std::string("HQEC_WORKERS must be a positive integer, got '") + s + "'");
    return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

double projected_event_count(const Campaign& cfg) {
  const EffectiveCoefficients coeff = cfg.resolved_coefficients();
  double total = 0.0;
  for (int n : cfg.sizes) {
    const LatticeGeom geom(n, cfg.orientation);
    for (double beta : cfg.betas) {
      const double r0 = ThermalChain(geom, cfg.couplings, coeff, cfg.mode, beta, 0).total_rate();
      double tsum = 0.0;
      if (cfg.snapshot_reuse) {
        if (!cfg.times.empty()) tsum = cfg.absolute_time(cfg.times.back(), beta);
      } else {
        for (double t : cfg.times) tsum += cfg.absolute_time(t, beta);
      }
      total += r0 * tsum * static_cast<double>(cfg.trajectories);
      if (!cfg.times.empty())
        total += r0 * cfg.absolute_time(cfg.times.back(), beta) * static_cast<double>(cfg.density_trajectories);
    }
  }
  return total;
}

CampaignResult run_campaign(const Campaign& cfg, int workers) {
  const auto start = std::chrono::steady_clock::now();
  validate(cfg);
  CampaignResult res;
  res.projected_events = projected_event_count(cfg);
  if (res.projected_events > cfg.event_budget) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "campaign refused: projected %.3g events exceeds the budget of %.3g",
                  res.projected_events, cfg.event_budget);
    throw std::runtime_error(buf);
  }
  const EffectiveCoefficients coeff = cfg.resolved_coefficients();
  const std::size_t nt = cfg.times.size();

  struct Block {
    int n;
    double beta;
    LatticeGeom geom;
    LogicalOperators logicals;
  };
  std::vector<Block> blocks;
  for (int n : cfg.sizes) {
    const LatticeGeom geom(n, cfg.orientation);
    const LogicalOperators logicals = logical_operators(geom);
    for (double beta : cfg.betas) blocks.push_back({n, beta, geom, logicals});
  }
  for (const auto& b : blocks) {
    ErrorRateCurve c{b.n, b.beta, {}};
    for (double t : cfg.times) c.points.push_back({cfg.absolute_time(t, b.beta), cfg.trajectories, 0, 0.0, {}});
    res.curves.push_back(std::move(c));
    res.stats.push_back({b.n, b.beta, 0, {}, 0.0, 0, 0});
  }
  res.failure_bits.assign(blocks.size() * nt, std::vector<std::uint8_t>(static_cast<std::size_t>(cfg.trajectories), 0));

  // Per-trajectory tallies, merged in index order afterwards.
  struct Tally {
    std::uint64_t events = 0;
    std::array<std::uint64_t, 4> letters{};
    bool rows_ok = true;
  };
  const long per_block = cfg.snapshot_reuse ? cfg.trajectories : cfg.trajectories * static_cast<long>(nt);
  const long total_items = per_block * static_cast<long>(blocks.size());
  std::vector<Tally> tallies(static_cast<std::size_t>(total_items));

  parallel_for(total_items, workers, [&](long item) {
    const std::size_t bi = static_cast<std::size_t>(item / per_block);
    const long local = item % per_block;
    const Block& b = blocks[bi];
    ThermalChain chain(b.geom, cfg.couplings, coeff, cfg.mode, b.beta, trajectory_seed(cfg.seed, static_cast<std::uint64_t>(item)));
    Tally& tally = tallies[static_cast<std::size_t>(item)];
    auto decode_at = [&](std::size_t ti, long k) {
      chain.advance_to(res.curves[bi].points[ti].t);
      const DecodeOutcome out = decode(chain.frame(), b.geom, b.logicals);
      res.failure_bits[bi * nt + ti][static_cast<std::size_t>(k)] = out.success ? 0 : 1;
      tally.rows_ok = tally.rows_ok && rows_pair_up(chain.frame());
    };
    if (cfg.snapshot_reuse) {
      for (std::size_t ti = 0; ti < nt; ++ti) decode_at(ti, local);
    } else {
      decode_at(static_cast<std::size_t>(local / cfg.trajectories), local % cfg.trajectories);
    }
    tally.events = chain.event_count();
    tally.letters = chain.letter_counts();
  });

  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    PointStats& st = res.stats[bi];
    const double qubits = blocks[bi].geom.qubit_count();
    for (long local = 0; local < per_block; ++local) {
      const Tally& t = tallies[bi * static_cast<std::size_t>(per_block) + static_cast<std::size_t>(local)];
      st.events += t.events;
      for (int l = 0; l < 4; ++l) st.letter_counts[l] += t.letters[l];
      if (!t.rows_ok) ++st.row_parity_violations;
      ++st.trajectories;
      const std::size_t ti = cfg.snapshot_reuse ? nt - 1 : static_cast<std::size_t>(local / cfg.trajectories);
      st.qubit_time += qubits * res.curves[bi].points[ti].t;
    }
    for (std::size_t ti = 0; ti < nt; ++ti) {
      CurvePoint& p = res.curves[bi].points[ti];
      const auto& bits = res.failure_bits[bi * nt + ti];
      p.failures = std::count(bits.begin(), bits.end(), std::uint8_t{1});
      p.p = p.trials > 0 ? static_cast<double>(p.failures) / static_cast<double>(p.trials) : 0.0;
      p.ci = wilson_interval(p.failures, p.trials);
    }
  }

  if (cfg.density_trajectories > 0 && nt > 0) {
    const long dt_total = cfg.density_trajectories * static_cast<long>(blocks.size());
    std::vector<TrajectoryRecord> records(static_cast<std::size_t>(dt_total), TrajectoryRecord{{}, SyndromeFrame(blocks[0].geom), {}, {}, 0, 0, {}});
    parallel_for(dt_total, workers, [&](long item) {
      const Block& b = blocks[static_cast<std::size_t>(item / cfg.density_trajectories)];
      ThermalConfig tc;
      tc.beta = b.beta;
      tc.t_max = cfg.absolute_time(cfg.times.back(), b.beta);
      tc.mode = cfg.mode;
      tc.seed = trajectory_seed(cfg.seed ^ 0xde4517e5ULL, static_cast<std::uint64_t>(item));
      tc.record_density = true;
      tc.density_sample_interval = tc.t_max / std::max(1, cfg.density_samples);
      records[static_cast<std::size_t>(item)] = simulate_trajectory(b.geom, cfg.couplings, coeff, tc);
    });
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto first = records.begin() + static_cast<long>(bi) * cfg.density_trajectories;
      const std::vector<TrajectoryRecord> slice(first, first + cfg.density_trajectories);
      res.density.push_back({blocks[bi].n, blocks[bi].beta, dimer_density_stats(slice)});
    }
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<Crossing> estimate_crossings(const std::vector<ErrorRateCurve>& curves, int resamples, std::uint64_t seed) {
  std::vector<Crossing> out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = 0; j < curves.size(); ++j) {
      const ErrorRateCurve& a = curves[i];
      const ErrorRateCurve& b = curves[j];
      if (a.beta != b.beta || a.n >= b.n || a.points.size() != b.points.size() || a.points.size() < 2) continue;
      bool same_grid = true;
      for (std::size_t k = 0; k < a.points.size(); ++k) same_grid = same_grid && a.points[k].t == b.points[k].t;
      if (!same_grid) continue;
      std::vector<double> t, d;
      for (std::size_t k = 0; k < a.points.size(); ++k) {
        t.push_back(a.points[k].t);
        d.push_back(logit(b.points[k].failures, b.points[k].trials) - logit(a.points[k].failures, a.points[k].trials));
      }
      const std::optional<double> tc = first_crossing(t, d);
      if (!tc) continue;
      std::vector<double> boot;
      for (int r = 0; r < resamples; ++r) {
        std::vector<double> db(d.size());
        for (std::size_t k = 0; k < d.size(); ++k) {
          auto draw = [&](const CurvePoint& p) {
            std::binomial_distribution<long> bin(p.trials, p.trials > 0 ? static_cast<double>(p.failures) / p.trials : 0.0);
            return logit(bin(rng), p.trials);
          };
          db[k] = draw(b.points[k]) - draw(a.points[k]);
        }
        if (auto c = first_crossing(t, db)) boot.push_back(*c);
      }
      Crossing c{a.n, b.n, a.beta, *tc, *tc, *tc};
      if (!boot.empty()) {
        std::sort(boot.begin(), boot.end());
        c.lo = boot[static_cast<std::size_t>(0.025 * (boot.size() - 1))];
        c.hi = boot[static_cast<std::size_t>(0.975 * (boot.size() - 1))];
      }
      out.push_back(c);
    }
  return out;
}

std::string to_string(ScalingModel m) { return m == ScalingModel::linear ? "linear" : "exponential"; }

ScalingFit fit_lifetime_scaling(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("fit_lifetime_scaling: need at least 3 points");
  for (const auto& [b, t] : points)
    if (!(t > 0)) throw std::invalid_argument("fit_lifetime_scaling: lifetimes must be positive");
  auto fit = [&](bool log_space, double& slope, double& intercept, double& r2) {
    const double m = static_cast<double>(points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, t] : points) {
      const double y = log_space ? std::log(t) : t;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double den = m * sxx - sx * sx;
    if (std::abs(den) <= 1e-12 * std::max(1.0, m * sxx)) throw std::invalid_argument("fit_lifetime_scaling: all beta values coincide");
    slope = (m * sxy - sx * sy) / den;
    intercept = (sy - slope * sx) / m;
    double ss_res = 0, ss_tot = 0;
    const double mean = sy / m;
    for (const auto& [x, t] : points) {
      const double y = log_space ? std::log(t) : t;
      ss_res += (y - slope * x - intercept) * (y - slope * x - intercept);
      ss_tot += (y - mean) * (y - mean);
    }
    r2 = ss_tot > 0 ? 1 - ss_res / ss_tot : 1.0;
  };
  ScalingFit f;
  fit(false, f.linear_slope, f.linear_intercept, f.linear_r2);
  fit(true, f.exp_rate, f.exp_log_prefactor, f.exp_r2);
  f.model = f.exp_r2 > f.linear_r2 ? ScalingModel::exponential : ScalingModel::linear;
  return f;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) {
    if (r.size() != header.size()) throw std::logic_error("csv row width does not match header for " + path.string());
    line(r);
  }
}

void write_metadata(const std::filesystem::path& csv_path, std::uint64_t seed, const std::string& config_text,
                    const std::string& provenance, double wall_seconds) {
  std::filesystem::path meta = csv_path;
  meta.replace_extension(".meta.json");
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(config_text)));
  const nlohmann::json j = {{"seed", seed},
                            {"config_hash", hash},
                            {"coefficient_provenance", provenance},
                            {"wall_time_seconds", wall_seconds},
                            {"csv", csv_path.filename().string()}};
  std::ofstream os(meta);
  if (!os) throw std::runtime_error("cannot write " + meta.string());
  os << j.dump(2) << '\n';
}

}  // namespace honeycomb

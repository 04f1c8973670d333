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

// hqec: command-line front end. Every subcommand reads a JSON config and
// writes CSV files, each with a <name>.meta.json beside it.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "honeycomb/bounds.hpp"
#include "honeycomb/decoder.hpp"
#include "honeycomb/diffusion.hpp"
#include "honeycomb/free_fermion.hpp"
#include "honeycomb/harness.hpp"
#include "honeycomb/wick.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace honeycomb;

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string f(double v) { return format_double(v); }
std::string f(long v) { return std::to_string(v); }
std::string f(int v) { return std::to_string(v); }
std::string f(std::uint64_t v) { return std::to_string(v); }

struct Context {
  json cfg;
  std::string text;
  fs::path out;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::uint64_t seed() const { return cfg.value("seed", std::uint64_t{0}); }
  void emit(const std::string& name, const std::vector<std::string>& header, const Rows& rows,
            const std::string& provenance) const {
    const fs::path p = out / name;
    write_csv(p, header, rows);
    write_metadata(p, seed(), text, provenance,
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
};

Couplings couplings_of(const json& cfg) {
  Couplings c{0.1, 0.1, 0.5};
  if (cfg.contains("couplings")) {
    const json& j = cfg.at("couplings");
    c.jx = j.value("jx", c.jx);
    c.jy = j.value("jy", c.jy);
    c.jz = j.value("jz", c.jz);
  }
  return c;
}

std::vector<int> sizes_of(const json& cfg, const char* key = "n") {
  const json& j = cfg.at(key);
  if (j.is_number_integer()) return {j.get<int>()};
  return j.get<std::vector<int>>();
}

EffectiveCoefficients coefficients_of(const json& cfg, const Couplings& c) {
  EffectiveCoefficients e = default_coefficients(c);
  if (!cfg.contains("coefficients")) return e;
  const json& j = cfg.at("coefficients");
  e.mu = j.value("mu", e.mu);
  e.c4 = j.value("c4", e.c4);
  if (j.contains("corrections")) {
    for (const json& t : j.at("corrections")) {
      ClusterTerm term;
      term.coefficient = t.at("coefficient").get<double>();
      for (const json& o : t.at("offsets")) term.offsets.push_back({o.at(0).get<int>(), o.at(1).get<int>()});
      e.corrections.push_back(std::move(term));
    }
  }
  e.provenance = j.value("provenance", std::string("user-supplied coefficients"));
  return e;
}

std::string coefficient_note(const EffectiveCoefficients& e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "; mu=%.12g c4=%.12g corrections=%zu", e.mu, e.c4, e.corrections.size());
  return e.provenance + buf;
}

void cmd_solve(const Context& ctx) {
  const Couplings c = couplings_of(ctx.cfg);
  const bool high = ctx.cfg.value("precision", std::string("high")) == "high";
  const double limit = energy_density_limit<double>(c, ctx.cfg.value("resolution", 4096));
  Rows rows;
  for (int n : sizes_of(ctx.cfg)) {
    const SplittingReport rep = splitting_report(c, n);
    for (const SectorLabel l : kSectors) {
      const double e = high ? static_cast<double>(sector_energy<HighPrecision>(c, n, l)) : sector_energy<double>(c, n, l);
      rows.push_back({f(n), f(l.lx), f(l.ly), f(e), f(high ? rep.value : rep.value_double),
                      f(e / (static_cast<double>(n) * n) - limit), rep.saturated ? "1" : "0"});
    }
  }
  ctx.emit("solve.csv", {"n", "l_x", "l_y", "energy", "splitting", "density_gap", "saturated"}, rows,
           "closed-form free-fermion sector energies");
}

void cmd_bounds(const Context& ctx) {
  const Couplings c = couplings_of(ctx.cfg);
  c.require_gapped();
  const GapConstants g = gap_constants(c);
  const double limit = energy_density_limit<double>(c);
  Rows rows;
  for (int n : sizes_of(ctx.cfg)) {
    const QuadratureCertificate q = quadrature_certificate(c, n, limit);
    rows.push_back({f(n), f(g.a), f(g.b), f(g.Q), f(g.R), f(splitting_report(c, n).value), f(splitting_bound(c, n)),
                    f(indistinguishability_bound(c, n).value), f(correctability_bound(c, n).value),
                    f(q.observed_error), f(q.davis_bound)});
  }
  ctx.emit("bounds.csv",
           {"n", "a", "b", "Q", "R", "splitting", "splitting_bound", "delta", "eps", "observed_quad_error", "davis_bound"},
           rows, "closed-form gap constants; free-fermion splitting");
}

LinkAxis axis_of(const std::string& s) {
  if (s == "x") return LinkAxis::x;
  if (s == "y") return LinkAxis::y;
  if (s == "z") return LinkAxis::z;
  throw std::invalid_argument("link axis must be x, y or z, got '" + s + "'");
}

void cmd_wick(const Context& ctx) {
  const Couplings c = couplings_of(ctx.cfg);
  LinkOperator op;
  for (const json& g : ctx.cfg.at("generators"))
    op.generators.push_back({g.at("qx").get<int>(), g.at("qy").get<int>(), axis_of(g.at("axis").get<std::string>())});
  const MixedSign sign = ctx.cfg.value("sign", std::string("plus_first")) == "minus_first" ? MixedSign::minus_first
                                                                                             : MixedSign::plus_first;
  const std::vector<Endpoint> eps = endpoints(op);
  Rows rows;
  for (int n : sizes_of(ctx.cfg)) {
    const SectorGap gap = sector_gap(c, n, eps, sign);
    for (const SectorLabel l : kSectors)
      rows.push_back({f(n), to_string(l), f(link_expectation_magnitude(c, n, l, eps, sign)), f(gap.gap),
                      f(gap.lemma_bound), gap.ok ? "1" : "0"});
  }
  ctx.emit("wick.csv", {"n", "sector", "magnitude", "gap", "bound", "ok"}, rows,
           "Wick contraction of free-fermion vacuum correlators");
}

void cmd_simulate(const Context& ctx) {
  const json& j = ctx.cfg;
  const Couplings c = couplings_of(j);
  const EffectiveCoefficients coeff = coefficients_of(j, c);
  const LatticeGeom geom(j.at("n").get<int>(), orientation_from_string(j.value("orientation", std::string("rotated45"))));
  const LogicalOperators logicals = logical_operators(geom);
  ThermalConfig tc;
  tc.beta = j.at("beta").get<double>();
  tc.t_max = j.at("t_max").get<double>();
  tc.mode = noise_mode_from_string(j.value("mode", std::string("spin_boson")));
  tc.record_density = true;
  tc.density_sample_interval = tc.t_max / j.value("density_samples", 50);
  const long trajectories = j.value("trajectories", 1L);
  const bool do_decode = j.value("decode", true);
  Rows rows;
  std::vector<TrajectoryRecord> records;
  for (long k = 0; k < trajectories; ++k) {
    tc.seed = trajectory_seed(ctx.seed(), static_cast<std::uint64_t>(k));
    TrajectoryRecord r = simulate_trajectory(geom, c, coeff, tc);
    if (do_decode) {
      const DecodeOutcome d = decode(r.final_frame, geom, logicals);
      r.decode = {true, d.success, d.logical_class, d.matching_weight};
    }
    rows.push_back({f(k), f(r.seed), f(r.event_count), f(r.letter_counts[1]), f(r.letter_counts[3]),
                    f(r.letter_counts[2]), f(r.final_frame.broken_dimers()), f(r.final_frame.vortices()),
                    r.decode.decoded ? (r.decode.success ? "1" : "0") : "", f(r.decode.logical_class),
                    f(r.decode.matching_weight)});
    records.push_back(std::move(r));
  }
  const std::string prov = coefficient_note(coeff);
  ctx.emit("trajectories.csv",
           {"trajectory", "seed", "events", "x_events", "y_events", "z_events", "broken_dimers", "vortices", "success",
            "logical_class", "matching_weight"},
           rows, prov);
  Rows drows;
  if (!records.empty())
    for (const DensityPoint& p : dimer_density_stats(records)) drows.push_back({f(p.time), f(p.mean), f(p.lo), f(p.hi)});
  ctx.emit("density.csv", {"time", "mean", "lo", "hi"}, drows, prov);
}

void cmd_decode_bench(const Context& ctx) {
  const json& j = ctx.cfg;
  if (j.contains("frames")) {
    Rows rows;
    long k = 0;
    for (const json& fr : j.at("frames")) {
      const LatticeGeom geom(fr.at("n").get<int>(),
                             orientation_from_string(fr.value("orientation", std::string("rotated45"))));
      SyndromeFrame frame(geom);
      frame.apply_inplace(PauliOperator::from_string(fr.at("error").get<std::string>()));
      const DecodeOutcome d = decode(frame, geom);
      rows.push_back({f(k++), f(geom.n()), d.success ? "1" : "0", f(d.logical_class), f(d.matching_weight)});
    }
    ctx.emit("frames.csv", {"frame", "n", "success", "logical_class", "matching_weight"}, rows,
             "serialized frames");
    return;
  }
  Campaign cfg;
  cfg.couplings = couplings_of(j);
  cfg.coefficients = coefficients_of(j, cfg.couplings);
  cfg.sizes = sizes_of(j);
  cfg.betas = j.at("beta").is_array() ? j.at("beta").get<std::vector<double>>() : std::vector<double>{j.at("beta").get<double>()};
  cfg.times = j.at("t").is_array() ? j.at("t").get<std::vector<double>>() : std::vector<double>{j.at("t").get<double>()};
  cfg.times_in_beta = j.value("t_in_beta", false);
  cfg.trajectories = j.value("trajectories", 100L);
  cfg.mode = noise_mode_from_string(j.value("mode", std::string("spin_boson")));
  cfg.orientation = orientation_from_string(j.value("orientation", std::string("rotated45")));
  cfg.seed = ctx.seed();
  const CampaignResult res = run_campaign(cfg);
  Rows rows;
  for (const auto& curve : res.curves)
    for (const auto& p : curve.points)
      rows.push_back({f(curve.n), f(curve.beta), f(p.t), f(p.trials), f(p.trials - p.failures),
                      f(p.trials ? 1.0 - p.p : 0.0), f(1.0 - p.ci.hi), f(1.0 - p.ci.lo)});
  ctx.emit("success.csv", {"n", "beta", "t", "trials", "successes", "success_rate", "ci_lo", "ci_hi"}, rows,
           coefficient_note(*cfg.coefficients));
}

void cmd_diffuse(const Context& ctx) {
  const json& j = ctx.cfg;
  const int n = j.at("n").get<int>();
  HoppingModel model;
  if (j.contains("amplitudes")) {
    const json& a = j.at("amplitudes");
    if (a.is_object()) {
      model = HoppingModel::nearest_neighbour(a.at("tx").get<double>(), a.at("ty").get<double>());
    } else {
      for (const json& h : a)
        model.amplitudes[{h.at("dx").get<int>(), h.at("dy").get<int>()}] = {h.at("re").get<double>(), h.value("im", 0.0)};
      model.provenance = "explicit";
    }
  } else {
    model = HoppingModel::from_couplings(couplings_of(j));
  }
  if (j.contains("onsite")) model.onsite = j.at("onsite").get<std::vector<double>>();
  std::vector<double> times;
  if (j.contains("times")) {
    times = j.at("times").get<std::vector<double>>();
  } else {
    const double t_max = j.at("t_max").get<double>();
    const int steps = j.value("steps", 100);
    for (int k = 0; k <= steps; ++k) times.push_back(t_max * k / steps);
  }
  DimerSite start{0, 0};
  if (j.contains("start")) start = {j.at("start").at(0).get<int>(), j.at("start").at(1).get<int>()};
  std::vector<std::string> header = {"time", "mean_distance", "norm", "energy"};
  for (int d = 0; d <= n; ++d) header.push_back("P" + std::to_string(d));
  Rows rows;
  for (const WalkState& s : evolve(model, n, start, times)) {
    const std::vector<double> p = distance_distribution(s, n, start);
    std::vector<std::string> row = {f(s.time), f(mean_distance(p)), f(s.norm()), f(energy_expectation(model, n, s))};
    for (double v : p) row.push_back(f(v));
    rows.push_back(std::move(row));
  }
  ctx.emit("diffusion.csv", header, rows, model.provenance);
}

Campaign campaign_of(const Context& ctx) {
  const json& j = ctx.cfg;
  Campaign cfg;
  cfg.couplings = couplings_of(j);
  cfg.coefficients = coefficients_of(j, cfg.couplings);
  cfg.sizes = sizes_of(j, "sizes");
  cfg.betas = j.at("betas").get<std::vector<double>>();
  cfg.times = j.at("times").get<std::vector<double>>();
  cfg.times_in_beta = j.value("times_in_beta", true);
  cfg.trajectories = j.value("trajectories", 1000L);
  cfg.mode = noise_mode_from_string(j.value("mode", std::string("spin_boson")));
  cfg.orientation = orientation_from_string(j.value("orientation", std::string("rotated45")));
  cfg.seed = ctx.seed();
  cfg.event_budget = j.value("event_budget", cfg.event_budget);
  cfg.snapshot_reuse = j.value("snapshot_reuse", false);
  cfg.density_trajectories = j.value("density_trajectories", 0L);
  cfg.density_samples = j.value("density_samples", cfg.density_samples);
  return cfg;
}

void cmd_campaign(const Context& ctx) {
  const Campaign cfg = campaign_of(ctx);
  const CampaignResult res = run_campaign(cfg);
  const std::string prov = coefficient_note(*cfg.coefficients);
  Rows curves;
  for (const auto& c : res.curves)
    for (const auto& p : c.points)
      curves.push_back({f(c.n), f(c.beta), f(p.t), f(p.t / c.beta), f(p.trials), f(p.failures), f(p.p), f(p.ci.lo), f(p.ci.hi)});
  ctx.emit("curves.csv", {"n", "beta", "t", "t_over_beta", "trials", "failures", "p", "ci_lo", "ci_hi"}, curves, prov);

  const std::vector<Crossing> xs = estimate_crossings(res.curves);
  Rows crossings;
  std::map<double, std::vector<double>> per_beta;
  for (const auto& x : xs) {
    crossings.push_back({f(x.beta), f(x.n_small), f(x.n_large), f(x.t), f(x.t / x.beta), f(x.lo), f(x.hi)});
    per_beta[x.beta].push_back(x.t);
  }
  ctx.emit("crossings.csv", {"beta", "n_small", "n_large", "t_c", "t_c_over_beta", "ci_lo", "ci_hi"}, crossings, prov);

  std::vector<std::pair<double, double>> lifetimes;
  Rows lrows;
  for (const auto& [beta, ts] : per_beta) {
    double m = 0;
    for (double t : ts) m += t;
    lifetimes.push_back({beta, m / static_cast<double>(ts.size())});
    lrows.push_back({f(beta), f(lifetimes.back().second), f(static_cast<long>(ts.size()))});
  }
  ctx.emit("lifetimes.csv", {"beta", "t_c", "crossings"}, lrows, prov);

  Rows fit_rows;
  if (lifetimes.size() >= 3) {
    const ScalingFit fit = fit_lifetime_scaling(lifetimes);
    const bool lin = fit.model == ScalingModel::linear;
    fit_rows.push_back({"linear", f(fit.linear_slope), f(fit.linear_intercept), f(fit.linear_r2), lin ? "1" : "0"});
    fit_rows.push_back({"exponential", f(fit.exp_rate), f(fit.exp_log_prefactor), f(fit.exp_r2), lin ? "0" : "1"});
  }
  ctx.emit("lifetime_fit.csv", {"model", "slope", "intercept", "r2", "selected"}, fit_rows, prov);

  Rows stats;
  for (const auto& s : res.stats)
    stats.push_back({f(s.n), f(s.beta), f(s.trajectories), f(s.events), f(s.letter_counts[1]), f(s.letter_counts[3]),
                     f(s.letter_counts[2]), f(s.per_qubit_rate()), f(s.row_parity_violations)});
  ctx.emit("stats.csv",
           {"n", "beta", "trajectories", "events", "x_events", "y_events", "z_events", "per_qubit_rate", "row_parity_violations"},
           stats, prov);

  Rows density;
  for (const auto& d : res.density)
    for (const auto& p : d.points) density.push_back({f(d.n), f(d.beta), f(p.time), f(p.mean), f(p.lo), f(p.hi)});
  ctx.emit("density.csv", {"n", "beta", "time", "mean", "lo", "hi"}, density, prov);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"honeycomb quantum-memory toolkit"};
  app.require_subcommand(1);
  std::string config_path;
  std::string out_dir;
  const std::map<std::string, void (*)(const Context&)> commands = {
      {"solve", cmd_solve},       {"bounds", cmd_bounds},
      {"wick", cmd_wick},         {"simulate", cmd_simulate},
      {"decode-bench", cmd_decode_bench}, {"diffuse", cmd_diffuse},
      {"campaign", cmd_campaign}};
  const std::map<std::string, std::string> help = {
      {"solve", "free-fermion sector energies and splitting"},
      {"bounds", "gap constants, splitting and quadrature bounds"},
      {"wick", "link-operator expectation values per sector"},
      {"simulate", "thermal trajectories and dimer density"},
      {"decode-bench", "decoder success rates on generated or serialized frames"},
      {"diffuse", "single broken-dimer quantum walk"},
      {"campaign", "error-rate curves, crossings and lifetime fits"}};
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory")->required();
  }
  CLI11_PARSE(app, argc, argv);
  try {
    Context ctx;
    std::ifstream is(config_path);
    std::stringstream buf;
    buf << is.rdbuf();
    ctx.text = buf.str();
    ctx.cfg = json::parse(ctx.text);
    ctx.out = out_dir;
    fs::create_directories(ctx.out);
    for (const auto& [name, fn] : commands)
      if (app.got_subcommand(name)) fn(ctx);
  } catch (const std::exception& e) {
    std::cerr << "hqec: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

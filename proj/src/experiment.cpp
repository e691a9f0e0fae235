#include "sgn/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "sgn/diagnostics_io.hpp"
#include "sgn/errors.hpp"
#include "sgn/initdata.hpp"
#include "sgn/kernels.hpp"
#include "sgn/snapshot.hpp"
#include "sgn/spectral.hpp"

namespace sgn {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string snapshot_name(std::size_t index, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "snap_%02zu_t%.4f.sgn", index, t);
  return buf;
}

void write_json(const fs::path& path, const json& j) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw FormatError("cannot write '" + tmp.string() + "'");
    out << j.dump(2) << '\n';
  }
  fs::rename(tmp, path);
}

json summary_json(const ExperimentConfig& cfg, const RunSummary& s) {
  json j;
  j["preset"] = std::string(preset_name(cfg.preset));
  j["grid"] = {{"nx", cfg.nx}, {"ny", cfg.ny}, {"lx", cfg.lx}, {"ly", cfg.ly}};
  j["dt"] = cfg.dt();
  j["steps"] = s.steps;
  j["t_final"] = s.t_final;
  j["relative_drift"] = {
      {"mass", s.drift_mass}, {"px", s.drift_px}, {"py", s.drift_py}, {"energy", s.drift_energy}};
  j["max_gmres_iterations_per_step"] = s.max_gmres_iterations;
  j["min_h"] = s.min_h;
  j["curl"] = {{"initial", s.curl_initial}, {"final", s.curl_final}};
  j["wall_seconds"] = s.wall_seconds;
  j["snapshots"] = s.snapshot_files;
  json settings = json::object();
  for (const auto& [k, v] : to_settings(cfg)) settings[k] = v;
  j["config"] = settings;
  return j;
}

}  // namespace

State initial_state(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.preset == Preset::custom && !cfg.init_path.empty()) {
    Snapshot snap = read_snapshot(cfg.init_path);
    if (snap.state.grid().nx() != cfg.nx || snap.state.grid().ny() != cfg.ny || snap.state.grid().lx() != cfg.lx ||
        snap.state.grid().ly() != cfg.ly) {
      throw ConfigError("initial snapshot grid does not match the configured grid");
    }
    refresh_sigma(snap.state, cfg.gmres);
    return std::move(snap.state);
  }
  const InitContext ctx{make_grid(cfg.nx, cfg.ny, cfg.lx, cfg.ly), cfg.physics, cfg.gmres};
  switch (cfg.preset) {
    case Preset::line:
    case Preset::soldef:
      return line_wave_2d(ctx, cfg.c, cfg.x0, cfg.preset == Preset::line ? 0.0 : cfg.eps, cfg.mode);
    case Preset::solgauss_plus:
      return gaussian_perturbed_wave(ctx, cfg.c, cfg.x0, +1, cfg.amp);
    case Preset::solgauss_minus:
      return gaussian_perturbed_wave(ctx, cfg.c, cfg.x0, -1, cfg.amp);
    case Preset::cross:
      return crossing_waves(ctx, cfg.c, cfg.subtract_background);
    case Preset::gauss:
      return gaussian_hump(ctx, cfg.alpha, cfg.literal_hump);
    case Preset::custom:
      return rest_state(ctx);
  }
  throw ConfigError("unhandled preset");
}

DriftScales drift_scales(const State& s0, const Diagnostics& d0, const PhysicalParams& p) {
  const std::size_t n = s0.h.size();
  aligned_vector<double> dev(n);
  const auto h = s0.h.values();
  for (std::size_t i = 0; i < n; ++i) dev[i] = std::abs(h[i] - p.h_inf);
  const double cell = s0.grid().cell_area();
  DriftScales s;
  s.mass = std::max(std::abs(d0.mass), cell * kernels::omp::sum(dev));
  const double depth_integral = cell * kernels::omp::sum(h);
  const double p0 = std::hypot(d0.momentum_x, d0.momentum_y);
  s.momentum = std::max(p0, std::sqrt(std::max(0.0, 2.0 * d0.energy * depth_integral)));
  s.energy = std::abs(d0.energy);
  return s;
}

double relative_drift(double value, double ref, double scale) {
  const double diff = std::abs(value - ref);
  return scale > 0.0 ? diff / scale : diff;
}

RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir = cfg.output_dir;
  if (opt.write_files) fs::create_directories(dir);

  State s = initial_state(cfg);
  const double dt = cfg.dt();
  StepOptions step_opt;
  step_opt.gmres = cfg.gmres;
  step_opt.krasny_threshold = cfg.krasny_threshold;
  step_opt.dealias = cfg.dealias;

  const std::vector<int> snap_steps = cfg.snapshot_steps();
  RunSummary sum;
  sum.curl_initial = curl_norm(s);
  const Diagnostics d0 = conserved_quantities(s, cfg.physics, cfg.gmres);
  const DriftScales scale = drift_scales(s, d0, cfg.physics);
  sum.min_h = min_value(s.h);
  sum.infimum.push_back({s.t, sum.min_h});
  sum.supremum.push_back({s.t, max_value(s.h)});

  auto record = [&](State& st, int iters) {
    refresh_sigma(st, cfg.gmres);
    Diagnostics d = conserved_quantities(st, cfg.physics, cfg.gmres);
    d.gmres_iterations = iters;
    sum.drift_mass = std::max(sum.drift_mass, relative_drift(d.mass, d0.mass, scale.mass));
    sum.drift_px = std::max(sum.drift_px, relative_drift(d.momentum_x, d0.momentum_x, scale.momentum));
    sum.drift_py = std::max(sum.drift_py, relative_drift(d.momentum_y, d0.momentum_y, scale.momentum));
    sum.drift_energy = std::max(sum.drift_energy, relative_drift(d.energy, d0.energy, scale.energy));
    sum.diagnostics.push_back(d);
    if (opt.progress) {
      std::fprintf(stderr, "t=%.4f hmin=%.6f hmax=%.6f dE=%.3e gmres=%d\n", d.t, d.h_min, d.h_max,
                   relative_drift(d.energy, d0.energy, scale.energy), iters);
    }
  };
  auto maybe_snapshot = [&](State& st, int step) {
    for (std::size_t i = 0; i < snap_steps.size(); ++i) {
      if (snap_steps[i] != step) continue;
      refresh_sigma(st, cfg.gmres);
      const std::string name = snapshot_name(i, st.t);
      if (opt.write_files) write_snapshot((dir / name).string(), st, cfg.physics);
      sum.snapshot_files.push_back(name);
    }
  };

  Diagnostics first = d0;
  first.gmres_iterations = 0;
  sum.diagnostics.push_back(first);
  maybe_snapshot(s, 0);
  if (opt.on_step) opt.on_step(s, 0);

  State last_good = s;
  try {
    for (int step = 1; step <= cfg.nt; ++step) {
      StepResult r = rk4_step(s, dt, cfg.physics, step_opt);
      s = std::move(r.state);
      s.t = step * dt;
      sum.max_gmres_iterations = std::max(sum.max_gmres_iterations, r.gmres_iterations);
      const double lo = min_value(s.h);
      sum.min_h = std::min(sum.min_h, lo);
      sum.infimum.push_back({s.t, lo});
      sum.supremum.push_back({s.t, max_value(s.h)});
      if (step % cfg.cadence == 0 || step == cfg.nt) record(s, r.gmres_iterations);
      maybe_snapshot(s, step);
      if (opt.on_step) opt.on_step(s, step);
      sum.steps = step;
      last_good = s;
    }
  } catch (const std::exception& e) {
    if (opt.write_files) {
      refresh_sigma(last_good, cfg.gmres);
      write_snapshot((dir / "last_good.sgn").string(), last_good, cfg.physics);
      write_json(dir / "error.json", {{"error", e.what()}, {"t_last_good", last_good.t}, {"steps", sum.steps}});
      export_diagnostics((dir / "diagnostics.csv").string(), sum.diagnostics);
    }
    throw;
  }

  sum.t_final = s.t;
  sum.curl_final = curl_norm(s);
  sum.final_state = std::move(s);
  sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (opt.write_files) {
    export_diagnostics((dir / "diagnostics.csv").string(), sum.diagnostics);
    write_series((dir / "infimum.csv").string(), sum.infimum, "hmin");
    write_series((dir / "supremum.csv").string(), sum.supremum, "hmax");
    write_json(dir / "summary.json", summary_json(cfg, sum));
  }
  return sum;
}

}  // namespace sgn

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sgn/analysis.hpp"
#include "sgn/config.hpp"
#include "sgn/dynamics.hpp"

namespace sgn {

/// Builds the preset's initial state (custom: rest state, or cfg.init_path).
State initial_state(const ExperimentConfig& cfg);

struct RunOptions {
  bool write_files = true;
  bool progress = false;  // one line per diagnostics row on stderr
  /// Called after every completed step (and once with the initial state at
  /// step 0) with a state whose sigma may be stale.
  std::function<void(const State&, int step)> on_step;
};

struct RunSummary {
  int steps = 0;
  double t_final = 0.0;
  double drift_mass = 0.0;  // max relative drifts over the diagnostics rows
  double drift_px = 0.0;
  double drift_py = 0.0;
  double drift_energy = 0.0;
  int max_gmres_iterations = 0;  // per step
  double min_h = 0.0;            // over every step
  double curl_initial = 0.0;
  double curl_final = 0.0;
  double wall_seconds = 0.0;
  std::vector<Diagnostics> diagnostics;
  TimeSeries infimum;  // every step, t = 0 included
  TimeSeries supremum;
  std::vector<std::string> snapshot_files;
  State final_state;
};

/// Marches cfg.nt RK4 steps. With write_files, cfg.output_dir receives the
/// snapshots, diagnostics.csv, infimum.csv and summary.json. A solver or
/// cavitation failure writes last_good.sgn and error.json before rethrowing.
RunSummary run_experiment(const ExperimentConfig& cfg, const RunOptions& opt = {});

/// Relative drift normalisations taken from the initial diagnostics:
/// mass by max(|M0|, int |h - h_inf|), momentum by max(|P0|, sqrt(2 E0 int h)),
/// energy by |E0|.
struct DriftScales {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
};

DriftScales drift_scales(const State& s0, const Diagnostics& d0, const PhysicalParams& p);

/// |value - ref| / scale, or the absolute difference when scale is 0.
double relative_drift(double value, double ref, double scale);

}  // namespace sgn

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgn/analysis.hpp"
#include "sgn/config.hpp"
#include "sgn/diagnostics_io.hpp"
#include "sgn/errors.hpp"
#include "sgn/experiment.hpp"
#include "sgn/snapshot.hpp"
#include "sgn/spectral.hpp"

namespace {

using nlohmann::json;

constexpr int kConfigExit = 2;
constexpr int kSolverExit = 3;

// Command-line flag -> config key. Every config key has a flag.
struct Flag {
  const char* name;
  const char* key;
  const char* help;
};

constexpr Flag kRunFlags[] = {
    {"--preset", "preset", "line, soldef, solgauss-plus, solgauss-minus, cross, gauss or custom"},
    {"--scale", "scale", "full (default) or ci (Nx, Ny divided by 4)"},
    {"--g", "g", "gravity"},
    {"--h-inf", "h_inf", "far-field depth"},
    {"--c", "c", "solitary wave speed"},
    {"--eps", "eps", "crest deformation amplitude (soldef)"},
    {"--mode", "mode", "crest deformation mode (soldef)"},
    {"--alpha", "alpha", "hump height (gauss)"},
    {"--x0", "x0", "initial crest position"},
    {"--amp", "amp", "Gaussian perturbation amplitude (solgauss)"},
    {"--literal-hump", "literal_hump", "gauss: h = alpha exp(-r^2) with no background"},
    {"--subtract-background", "subtract_background", "cross: subtract h_inf from the sum"},
    {"--init", "init", "custom: snapshot to start from"},
    {"--nx", "nx", "modes in x"},
    {"--ny", "ny", "modes in y"},
    {"--lx", "lx", "x period / 2 pi"},
    {"--ly", "ly", "y period / 2 pi"},
    {"--tmax", "tmax", "final time"},
    {"--nt", "nt", "number of time steps"},
    {"--snap", "snap", "snapshot times, comma separated"},
    {"--krasny", "krasny", "Krasny filter threshold (0 disables)"},
    {"--dealias", "dealias", "apply the 2/3 rule every step"},
    {"--gmres-tol", "gmres_tol", "GMRES relative tolerance"},
    {"--gmres-restart", "gmres_restart", "GMRES restart length"},
    {"--gmres-maxit", "gmres_maxit", "GMRES iteration cap"},
    {"--out", "out", "output directory"},
    {"--cadence", "cadence", "diagnostics every this many steps"},
};

int run_command(const std::string& config_file, const std::vector<std::optional<std::string>>& values, bool quiet) {
  sgn::Settings settings;
  if (!config_file.empty()) settings = sgn::read_settings_file(config_file);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i]) settings[kRunFlags[i].key] = *values[i];
  }
  const sgn::ExperimentConfig cfg = sgn::build_config(settings);
  sgn::RunOptions opt;
  opt.progress = !quiet;
  const sgn::RunSummary s = sgn::run_experiment(cfg, opt);
  std::printf("%d steps to t=%.6g, relative drifts: mass %.3e, px %.3e, py %.3e, energy %.3e\n", s.steps, s.t_final,
              s.drift_mass, s.drift_px, s.drift_py, s.drift_energy);
  std::printf("min h %.6g, max GMRES iterations per step %d, output in %s\n", s.min_h, s.max_gmres_iterations,
              cfg.output_dir.c_str());
  return 0;
}

int diff_line_command(const std::string& path, std::optional<double> c, std::optional<double> xs,
                      const std::string& out, double gmres_tol) {
  sgn::Snapshot snap = sgn::read_snapshot(path);
  sgn::GmresConfig gmres;
  gmres.tolerance = gmres_tol;
  const sgn::Crest crest = sgn::locate_crest(snap.state.h);
  const double speed = c ? *c : sgn::fit_speed(crest.h_max, snap.physics);
  const double x = xs ? *xs : crest.x;
  const sgn::LineWaveDiff d = sgn::diff_line_wave(snap.state, speed, x, snap.physics, gmres);
  json j = {{"t", snap.state.t},
            {"crest", {{"x", crest.x}, {"y", crest.y}, {"h_max", crest.h_max}, {"h_max_grid", crest.h_max_grid}}},
            {"c", speed},
            {"xs", x},
            {"max_abs_dh", d.max_dh},
            {"max_abs_dux", d.max_dux},
            {"max_abs_uy", d.max_uy}};
  if (!out.empty()) {
    sgn::State diff;
    diff.t = snap.state.t;
    diff.h = d.dh;
    diff.vx = d.dux;
    diff.vy = d.uy;
    diff.sigma = sgn::RealField2D(d.dh.grid_ptr());
    sgn::write_snapshot(out, diff, snap.physics);
    j["written"] = out;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int fit_radial_command(const std::string& path, const std::string& column, double t_min,
                       const std::string& objective, const std::string& out) {
  sgn::FitObjective obj;
  if (objective == "product") {
    obj = sgn::FitObjective::product;
  } else if (objective == "depth") {
    obj = sgn::FitObjective::depth;
  } else {
    throw sgn::ConfigError("objective must be 'product' or 'depth'");
  }
  const sgn::RadialFit f = sgn::fit_radial_collapse(sgn::read_series(path, column), t_min, obj);
  const json j = {{"a", f.a},
                  {"b", f.b},
                  {"residual", f.residual},
                  {"t_min", f.t_min},
                  {"samples", f.samples},
                  {"regular", f.regular},
                  {"iterations", f.iterations},
                  {"converged", f.converged},
                  {"objective", objective}};
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw sgn::FormatError("cannot write '" + out + "'");
    os << j.dump(2) << '\n';
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int info_command(const std::string& path) {
  const sgn::Snapshot snap = sgn::read_snapshot(path);
  const sgn::State& s = snap.state;
  const sgn::Grid& g = s.grid();
  const json j = {{"nx", g.nx()},
                  {"ny", g.ny()},
                  {"lx", g.lx()},
                  {"ly", g.ly()},
                  {"t", s.t},
                  {"g", snap.physics.g},
                  {"h_inf", snap.physics.h_inf},
                  {"has_sigma", s.sigma_current},
                  {"h", {{"min", sgn::min_value(s.h)}, {"max", sgn::max_value(s.h)}}},
                  {"max_abs_vx", sgn::max_abs(s.vx)},
                  {"max_abs_vy", sgn::max_abs(s.vy)}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudospectral Serre-Green-Naghdi solver"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run an experiment");
  std::string config_file;
  bool quiet = false;
  std::vector<std::optional<std::string>> values(std::size(kRunFlags));
  run->add_option("--config", config_file, "key = value settings file (flags override it)");
  run->add_flag("-q,--quiet", quiet, "no progress output");
  for (std::size_t i = 0; i < std::size(kRunFlags); ++i) {
    run->add_option(kRunFlags[i].name, values[i], kRunFlags[i].help);
  }

  auto* diff = app.add_subcommand("diff-line", "difference between a snapshot and a line solitary wave");
  std::string diff_path, diff_out;
  std::optional<double> diff_c, diff_xs;
  double diff_tol = 1e-12;
  diff->add_option("snapshot", diff_path)->required();
  diff->add_option("--c", diff_c, "wave speed (default: sqrt(g h_max) from the crest)");
  diff->add_option("--xs", diff_xs, "crest position (default: located crest)");
  diff->add_option("--out", diff_out, "write the difference (dh, dux, uy) as a snapshot");
  diff->add_option("--gmres-tol", diff_tol, "tolerance of the sigma re-solve");

  auto* fit = app.add_subcommand("fit-radial", "fit min h to a / (1 + b t)^2");
  std::string fit_path, fit_column = "hmin", fit_objective = "product", fit_out;
  double fit_tmin = 3.75;
  fit->add_option("csv", fit_path, "CSV with a t column")->required();
  fit->add_option("--column", fit_column, "column holding min h");
  fit->add_option("--tmin", fit_tmin, "start of the fit window");
  fit->add_option("--objective", fit_objective, "product or depth");
  fit->add_option("--out", fit_out, "also write the report here");

  auto* info = app.add_subcommand("info", "print snapshot header and field ranges");
  std::string info_path;
  info->add_option("snapshot", info_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigExit;
  }

  try {
    if (*run) return run_command(config_file, values, quiet);
    if (*diff) return diff_line_command(diff_path, diff_c, diff_xs, diff_out, diff_tol);
    if (*fit) return fit_radial_command(fit_path, fit_column, fit_tmin, fit_objective, fit_out);
    if (*info) return info_command(info_path);
  } catch (const sgn::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kConfigExit;
  } catch (const sgn::FormatError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kConfigExit;
  } catch (const sgn::SolverError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kSolverExit;
  } catch (const sgn::CavitationError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kSolverExit;
  } catch (const sgn::NonFiniteError& e) {
    std::fprintf(stderr, "solver failure: %s\n", e.what());
    return kSolverExit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

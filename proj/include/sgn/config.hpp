#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sgn/dynamics.hpp"
#include "sgn/gmres.hpp"

namespace sgn {

enum class Preset { line, soldef, solgauss_plus, solgauss_minus, cross, gauss, custom };

Preset parse_preset(std::string_view name);
std::string_view preset_name(Preset p);

struct ExperimentConfig {
  Preset preset = Preset::line;
  PhysicalParams physics;

  double c = 1.7;
  double eps = 0.1;
  int mode = 2;
  double alpha = 4.0;
  double x0 = -10.0;
  double amp = 0.1;
  bool literal_hump = false;
  bool subtract_background = true;
  std::string init_path;  // custom preset: snapshot to start from (empty: rest state)

  std::size_t nx = 512;
  std::size_t ny = 32;
  double lx = 10.0;
  double ly = 2.0;

  double t_max = 10.0;
  int nt = 1000;
  std::vector<double> snapshot_times;

  double krasny_threshold = kDefaultKrasnyThreshold;
  bool dealias = false;
  GmresConfig gmres;

  std::string output_dir = "out";
  int cadence = 10;

  double dt() const { return t_max / nt; }

  /// Throws ConfigError on any violated invariant.
  void validate() const;

  /// Step index of every snapshot time; throws ConfigError if two times
  /// round to the same step.
  std::vector<int> snapshot_steps() const;
};

/// Full-resolution defaults of a preset.
ExperimentConfig preset_defaults(Preset p);

/// Divides Nx and Ny by 4, keeping t_max and Nt.
void apply_ci_scale(ExperimentConfig& cfg);

/// Ordered key -> value settings, as read from a file or the command line.
using Settings = std::map<std::string, std::string>;

/// Parses `key = value` lines; `#` starts a comment.
Settings parse_settings(std::string_view text);
Settings read_settings_file(const std::string& path);

/// Builds a config: the preset's defaults, then `scale = ci` if given, then
/// every other key. Unknown keys and malformed values throw ConfigError.
ExperimentConfig build_config(const Settings& s);

/// Key/value pairs that reproduce cfg through build_config.
Settings to_settings(const ExperimentConfig& cfg);

}  // namespace sgn

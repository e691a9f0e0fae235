#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sgn/dynamics.hpp"
#include "sgn/field.hpp"

namespace sgn {

struct Crest {
  double x = 0.0;           // refined position of max h
  double y = 0.0;           // grid y of the maximising node
  double h_max = 0.0;       // parabola vertex value
  double h_max_grid = 0.0;  // raw nodal maximum
};

/// Global maximum of h, refined in x by a parabola through the node and its
/// periodic neighbours.
Crest locate_crest(const RealField2D& h);

/// Line-wave speed from the crest height, c = sqrt(g h_max).
double fit_speed(double h_max, const PhysicalParams& p = {});

struct LineWaveDiff {
  RealField2D dh;
  RealField2D dux;
  RealField2D uy;
  double max_dh = 0.0;
  double max_dux = 0.0;
  double max_uy = 0.0;
};

/// Pointwise difference between the state and the periodised line solitary
/// wave of speed c with crest at x = xs. Velocities are depth averaged.
LineWaveDiff diff_line_wave(const State& s, double c, double xs, const PhysicalParams& p = {},
                            const GmresConfig& cfg = {});

struct PolarVelocity {
  RealField2D ur;
  RealField2D uphi;
};

/// Radial and azimuthal components about the origin; both are 0 at r = 0.
PolarVelocity polar_velocity(const Velocity& u);

struct SeriesPoint {
  double t = 0.0;
  double value = 0.0;
};
using TimeSeries = std::vector<SeriesPoint>;

/// (t, min h) for every state.
TimeSeries infimum_series(std::span<const State> states);

/// Linearly interpolated time at which the series first falls below level.
std::optional<double> first_crossing_below(const TimeSeries& s, double level);

enum class FitObjective {
  product,  // sum (m (1 + b t)^2 - a)^2
  depth,    // sum (m - a / (1 + b t)^2)^2
};

struct RadialFit {
  double a = 0.0;         // h0 / c0^2
  double b = 0.0;         // w0 / c0
  double residual = 0.0;  // RMS of the objective's residual terms
  double t_min = 0.0;
  std::size_t samples = 0;
  bool regular = true;    // 1 + b t keeps one sign on the window
  int iterations = 0;
  bool converged = false;
};

/// Fits min h over t >= t_min to a / (1 + b t)^2 by Nelder-Mead started at
/// (m(t_min), -0.5). Needs at least 4 samples in the window.
RadialFit fit_radial_collapse(const TimeSeries& series, double t_min = 3.75,
                              FitObjective objective = FitObjective::product);

}  // namespace sgn

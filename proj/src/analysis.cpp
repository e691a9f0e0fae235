#include "sgn/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "sgn/errors.hpp"
#include "sgn/nelder_mead.hpp"
#include "sgn/solitary_wave.hpp"
#include "sgn/spectral.hpp"

namespace sgn {

Crest locate_crest(const RealField2D& h) {
  require_finite(h, "h");
  const Grid& g = h.grid();
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) {
      if (h(i, j) > h(bi, bj)) {
        bi = i;
        bj = j;
      }
    }
  }
  const double f0 = h(bi, bj);
  const double fm = h((bi + g.nx() - 1) % g.nx(), bj);
  const double fp = h((bi + 1) % g.nx(), bj);
  const double curv = fm - 2.0 * f0 + fp;
  double shift = 0.0, top = f0;
  if (curv < 0.0) {
    shift = std::clamp(0.5 * (fm - fp) / curv, -0.5, 0.5);
    top = f0 - 0.25 * (fm - fp) * shift;
  }
  return {g.x()[bi] + shift * g.dx(), g.y()[bj], top, f0};
}

double fit_speed(double h_max, const PhysicalParams& p) {
  p.validate();
  if (!std::isfinite(h_max) || h_max <= p.h_inf) {
    throw ConfigError("fit_speed: crest height must exceed h_inf");
  }
  return std::sqrt(p.g * h_max);
}

LineWaveDiff diff_line_wave(const State& s, double c, double xs, const PhysicalParams& p, const GmresConfig& cfg) {
  const SolitaryWave wave(c, p.g, p.h_inf);
  const Velocity u = recover_velocity(s, cfg);
  const Grid& g = s.grid();
  LineWaveDiff d{RealField2D(s.h.grid_ptr()), RealField2D(s.h.grid_ptr()), u.uy, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const SolitaryPoint e = wave.periodic(g.x()[i] - xs, g.period_x());
    for (std::size_t j = 0; j < g.ny(); ++j) {
      d.dh(i, j) = s.h(i, j) - e.h;
      d.dux(i, j) = u.ux(i, j) - e.u;
    }
  }
  d.max_dh = max_abs(d.dh);
  d.max_dux = max_abs(d.dux);
  d.max_uy = max_abs(d.uy);
  return d;
}

PolarVelocity polar_velocity(const Velocity& u) {
  require_same_grid(u.ux, u.uy);
  const Grid& g = u.ux.grid();
  PolarVelocity out{RealField2D(u.ux.grid_ptr()), RealField2D(u.ux.grid_ptr())};
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const double x = g.x()[i], y = g.y()[j];
      const double r = std::hypot(x, y);
      if (r == 0.0) continue;
      out.ur(i, j) = (x * u.ux(i, j) + y * u.uy(i, j)) / r;
      out.uphi(i, j) = (x * u.uy(i, j) - y * u.ux(i, j)) / r;
    }
  }
  return out;
}

TimeSeries infimum_series(std::span<const State> states) {
  TimeSeries out;
  out.reserve(states.size());
  for (const State& s : states) out.push_back({s.t, min_value(s.h)});
  return out;
}

std::optional<double> first_crossing_below(const TimeSeries& s, double level) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k].value >= level) continue;
    if (k == 0) return s[0].t;
    const SeriesPoint& a = s[k - 1];
    const SeriesPoint& b = s[k];
    return a.t + (a.value - level) / (a.value - b.value) * (b.t - a.t);
  }
  return std::nullopt;
}

RadialFit fit_radial_collapse(const TimeSeries& series, double t_min, FitObjective objective) {
  TimeSeries w;
  for (const SeriesPoint& p : series) {
    if (!std::isfinite(p.t) || !std::isfinite(p.value)) throw ConfigError("fit_radial_collapse: non-finite sample");
    if (p.t >= t_min) w.push_back(p);
  }
  if (w.size() < 4) throw ConfigError("fit_radial_collapse: fewer than 4 samples with t >= t_min");
  std::sort(w.begin(), w.end(), [](const SeriesPoint& a, const SeriesPoint& b) { return a.t < b.t; });

  auto term = [&](const SeriesPoint& p, double a, double b) {
    const double s = 1.0 + b * p.t;
    return objective == FitObjective::product ? p.value * s * s - a : p.value - a / (s * s);
  };
  auto cost = [&](std::span<const double> x) {
    double acc = 0.0;
    for (const SeriesPoint& p : w) {
      const double r = term(p, x[0], x[1]);
      acc += r * r;
    }
    return acc;
  };

  const double start[2] = {w.front().value, -0.5};
  NelderMeadOptions opt;
  opt.tol_x = 1e-12;
  opt.tol_f = 1e-20;
  const NelderMeadResult nm = nelder_mead(cost, start, opt);

  RadialFit fit;
  fit.a = nm.argmin[0];
  fit.b = nm.argmin[1];
  fit.residual = std::sqrt(nm.value / static_cast<double>(w.size()));
  fit.t_min = t_min;
  fit.samples = w.size();
  fit.iterations = nm.iterations;
  fit.converged = nm.converged;
  const double s0 = 1.0 + fit.b * w.front().t;
  const double s1 = 1.0 + fit.b * w.back().t;
  fit.regular = s0 != 0.0 && s1 != 0.0 && (s0 > 0.0) == (s1 > 0.0);
  return fit;
}

}  // namespace sgn

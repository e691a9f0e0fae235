#include "sgn/initdata.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "sgn/errors.hpp"
#include "sgn/solitary_wave.hpp"
#include "sgn/spectral.hpp"

namespace sgn {

namespace {

constexpr double kSeamWarning = 1e-10;

State with_sigma(const InitContext& ctx, RealField2D h, RealField2D vx, RealField2D vy) {
  ctx.physics.validate();
  State s{0.0, std::move(h), std::move(vx), std::move(vy), RealField2D(ctx.grid), false};
  validate_state(s);
  refresh_sigma(s, ctx.gmres);
  return s;
}

void warn_on_seam(const SolitaryWave& wave, double x0, double half_period) {
  const double tail = seam_tail(wave, x0, half_period);
  if (tail > kSeamWarning) {
    std::cerr << "warning: initial profile is " << tail << " above h_inf at the periodic seam\n";
  }
}

}  // namespace

State line_wave_2d(const InitContext& ctx, double c, double x0, double eps, int mode) {
  const SolitaryWave wave(c, ctx.physics.g, ctx.physics.h_inf);
  const Grid& g = *ctx.grid;
  RealField2D h(ctx.grid), vx(ctx.grid), vy(ctx.grid);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const double shift = eps * std::cos(mode * g.y()[j] / g.ly());
      const auto p = wave.at(g.x()[i] - x0 - shift);
      h(i, j) = p.h;
      vx(i, j) = p.dphi;
    }
  }
  warn_on_seam(wave, x0 + std::abs(eps), 0.5 * g.period_x());
  warn_on_seam(wave, x0 - std::abs(eps), 0.5 * g.period_x());
  if (eps != 0.0) {
    // the bent profile is rotational; keep its potential part
    auto [px, py] = gradient_part(vx, vy);
    vx = std::move(px);
    vy = std::move(py);
  }
  return with_sigma(ctx, std::move(h), std::move(vx), std::move(vy));
}

State gaussian_perturbed_wave(const InitContext& ctx, double c, double x0, int sign, double amp) {
  if (sign != 1 && sign != -1) throw ConfigError("perturbation sign must be +1 or -1");
  const SolitaryWave wave(c, ctx.physics.g, ctx.physics.h_inf);
  const Grid& g = *ctx.grid;
  RealField2D h(ctx.grid), vx(ctx.grid), vy(ctx.grid);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const double xi = g.x()[i] - x0;
    const auto p = wave.at(xi);
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const double yj = g.y()[j];
      h(i, j) = p.h + sign * amp * std::exp(-xi * xi - yj * yj);
      vx(i, j) = p.dphi;
    }
  }
  warn_on_seam(wave, x0, 0.5 * g.period_x());
  return with_sigma(ctx, std::move(h), std::move(vx), std::move(vy));
}

State crossing_waves(const InitContext& ctx, double c, bool subtract_background) {
  const SolitaryWave wave(c, ctx.physics.g, ctx.physics.h_inf);
  const Grid& g = *ctx.grid;
  const double background = subtract_background ? ctx.physics.h_inf : 0.0;
  RealField2D h(ctx.grid), vx(ctx.grid), vy(ctx.grid);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    const auto px = wave.at(g.x()[i]);
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const auto py = wave.at(g.y()[j]);
      h(i, j) = px.h + py.h - background;
      vx(i, j) = px.dphi;
      vy(i, j) = py.dphi;
    }
  }
  warn_on_seam(wave, 0.0, 0.5 * g.period_x());
  warn_on_seam(wave, 0.0, 0.5 * g.period_y());
  return with_sigma(ctx, std::move(h), std::move(vx), std::move(vy));
}

State gaussian_hump(const InitContext& ctx, double alpha, bool literal) {
  if (!(alpha > 0.0)) throw ConfigError("hump amplitude alpha must be positive");
  const Grid& g = *ctx.grid;
  const double base = literal ? 0.0 : ctx.physics.h_inf;
  RealField2D h(ctx.grid);
  for (std::size_t i = 0; i < g.nx(); ++i) {
    for (std::size_t j = 0; j < g.ny(); ++j) {
      const double r2 = g.x()[i] * g.x()[i] + g.y()[j] * g.y()[j];
      h(i, j) = base + (alpha - base) * std::exp(-r2);
    }
  }
  return with_sigma(ctx, std::move(h), RealField2D(ctx.grid), RealField2D(ctx.grid));
}

State rest_state(const InitContext& ctx) {
  return with_sigma(ctx, RealField2D(ctx.grid, ctx.physics.h_inf), RealField2D(ctx.grid), RealField2D(ctx.grid));
}

double seam_tail(const SolitaryWave& wave, double x0, double half_period) {
  const double left = wave.at(-half_period - x0).h;
  const double right = wave.at(half_period - x0).h;
  return std::max(left, right) - wave.h_inf();
}

}  // namespace sgn

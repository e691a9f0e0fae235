#pragma once

#include "sgn/dynamics.hpp"
#include "sgn/grid.hpp"

namespace sgn {

/// Common inputs of every generator. Each one returns a State whose sigma has
/// been obtained by an elliptic solve, so sigma_current is true.
struct InitContext {
  GridPtr grid;
  PhysicalParams physics;
  GmresConfig gmres;
};

/// Line solitary wave with crest along x = x0 + eps cos(mode * y / Ly).
///
/// vx is phi' of the 1D wave evaluated with the deformed argument; vy = 0.
/// eps = 0 gives the exact y-independent line wave. With Ly = 2, mode = 2 is
/// the deformation cos(y).
State line_wave_2d(const InitContext& ctx, double c, double x0, double eps = 0.0, int mode = 2);

/// Line wave plus sign * amp * exp(-(x-x0)^2 - y^2) in h; velocity of the
/// unperturbed wave.
State gaussian_perturbed_wave(const InitContext& ctx, double c, double x0, int sign, double amp = 0.1);

/// Superposition of a line wave travelling in x and one travelling in y.
/// With subtract_background the depth is h_c(x) + h_c(y) - h_inf so that it
/// tends to h_inf away from both crests; otherwise the plain sum.
State crossing_waves(const InitContext& ctx, double c, bool subtract_background = true);

/// Gaussian hump at rest: h = h_inf + (alpha - h_inf) exp(-r^2), so max h =
/// alpha. With literal = true, h = alpha exp(-r^2), which has no far-field
/// depth and is rejected by the cavitation check.
State gaussian_hump(const InitContext& ctx, double alpha, bool literal = false);

/// h = h_inf, v = 0.
State rest_state(const InitContext& ctx);

class SolitaryWave;

/// Height above h_inf of a wave centred at x0 where it meets the periodic seam
/// at +/- half_period. Generators warn on stderr when this exceeds 1e-10.
double seam_tail(const SolitaryWave& wave, double x0, double half_period);

}  // namespace sgn

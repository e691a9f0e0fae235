#pragma once

#include "sgn/elliptic.hpp"
#include "sgn/field.hpp"
#include "sgn/gmres.hpp"
#include "sgn/spectral.hpp"

namespace sgn {

/// Depth at or below which the evolution aborts with CavitationError.
inline constexpr double kCavitationDepth = 1e-6;

struct PhysicalParams {
  double g = 1.0;
  double h_inf = 1.0;

  void validate() const;
};

/// Snapshot of the evolution: depth h, v = grad(phi), and the auxiliary sigma.
///
/// `sigma_current` is true when sigma solves the elliptic problem for exactly
/// this (h, v). After an RK4 step sigma holds the last stage's solution, which
/// is only a warm start for the next solve.
struct State {
  double t = 0.0;
  RealField2D h;
  RealField2D vx;
  RealField2D vy;
  RealField2D sigma;
  bool sigma_current = false;

  const Grid& grid() const { return h.grid(); }
};

struct Rhs {
  RealField2D dh;
  RealField2D dvx;
  RealField2D dvy;
  RealField2D sigma;
  GmresStats stats;
};

struct StepOptions {
  GmresConfig gmres;
  double krasny_threshold = kDefaultKrasnyThreshold;  // 0 disables the filter
  bool dealias = false;
};

struct StepResult {
  State state;
  int gmres_iterations = 0;  // summed over the four stages
};

/// Checks grid agreement, finiteness and min(h) > kCavitationDepth.
void validate_state(const State& s);

/// Time derivatives of (h, vx, vy), warm-starting the sigma solve from s.sigma.
Rhs compute_rhs(const State& s, const PhysicalParams& p, const GmresConfig& cfg);

/// Classical RK4 step with one sigma solve per stage, followed by the Krasny
/// filter on h, vx and vy.
StepResult rk4_step(const State& s, double dt, const PhysicalParams& p, const StepOptions& opt = {});

/// Re-solves sigma for the current (h, v) if it is stale.
void refresh_sigma(State& s, const GmresConfig& cfg = {});

struct Velocity {
  RealField2D ux;
  RealField2D uy;
};

/// Depth-averaged velocity u = v - grad(sigma) / h.
Velocity recover_velocity(const State& s, const GmresConfig& cfg = {});

struct Diagnostics {
  double t = 0.0;
  double mass = 0.0;
  double momentum_x = 0.0;
  double momentum_y = 0.0;
  double energy = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;
  int gmres_iterations = 0;
};

/// Mass, momentum and energy integrals plus depth extrema. A stale sigma is
/// re-solved internally (the state itself is left untouched).
Diagnostics conserved_quantities(const State& s, const PhysicalParams& p, const GmresConfig& cfg = {});

/// max |d/dx vy - d/dy vx|.
double curl_norm(const State& s);

}  // namespace sgn

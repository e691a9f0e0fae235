#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "sgn/dynamics.hpp"
#include "sgn/errors.hpp"
#include "sgn/initdata.hpp"
#include "sgn/solitary_wave.hpp"
#include "sgn/spectral.hpp"

using namespace sgn;
using sgn::test::max_diff;

namespace {

InitContext context(std::size_t nx, std::size_t ny, double lx, double ly) {
  return {make_grid(nx, ny, lx, ly), {}, {}};
}

}  // namespace

TEST_CASE("rest state is a fixed point") {
  const auto ctx = context(16, 16, 1.0, 1.0);
  const State s = rest_state(ctx);
  const Rhs r = compute_rhs(s, {}, {});
  CHECK(max_abs(r.sigma) == 0.0);
  CHECK(max_abs(r.dh) == 0.0);
  CHECK(max_abs(r.dvx) == 0.0);
  CHECK(max_abs(r.dvy) == 0.0);
  const StepResult step = rk4_step(s, 0.1, {});
  CHECK(max_diff(step.state.h, s.h) == 0.0);
  CHECK(step.state.t == doctest::Approx(0.1));
}

TEST_CASE("line solitary wave satisfies h_t = -c h_x") {
  const double c = 1.7;
  const auto ctx = context(1024, 8, 10.0, 1.0);
  const State s = line_wave_2d(ctx, c, 0.0);
  const Rhs r = compute_rhs(s, {}, {});
  RealField2D expect = derivative(s.h, Axis::x);
  for (double& v : expect.values()) v *= -c;
  CHECK(max_diff(r.dh, expect) < 1e-8);
  RealField2D vx_expect = derivative(s.vx, Axis::x);
  for (double& v : vx_expect.values()) v *= -c;
  CHECK(max_diff(r.dvx, vx_expect) < 1e-8);
  CHECK(max_abs(r.dvy) < 1e-12);
}

TEST_CASE("initial Gaussian hump diagnostics match closed forms") {
  const double alpha = 4.0;
  const auto ctx = context(128, 128, 5.0, 5.0);
  const State s = gaussian_hump(ctx, alpha);
  const Diagnostics d = conserved_quantities(s, {});
  const double pi = std::numbers::pi;
  CHECK(d.mass == doctest::Approx(pi * (alpha - 1)).epsilon(1e-12));
  CHECK(d.energy == doctest::Approx((alpha - 1) * (alpha - 1) * pi / 4).epsilon(1e-10));
  CHECK(d.momentum_x == 0.0);
  CHECK(d.h_max == doctest::Approx(alpha));
  CHECK(max_abs(s.sigma) == 0.0);
}

TEST_CASE("momentum equals the integral of h v") {
  const auto ctx = context(64, 64, 1.0, 1.0);
  State s = gaussian_hump(ctx, 2.0);
  s.vx = test::random_smooth(ctx.grid, 1);
  s.vy = test::random_smooth(ctx.grid, 2);
  s.sigma_current = false;
  const Diagnostics d = conserved_quantities(s, {});
  RealField2D hv(ctx.grid);
  for (std::size_t n = 0; n < hv.size(); ++n) hv.values()[n] = s.h.values()[n] * s.vx.values()[n];
  CHECK(d.momentum_x == doctest::Approx(integrate(hv)).epsilon(1e-12));
}

TEST_CASE("velocity recovery with zero sigma is v") {
  const auto ctx = context(16, 16, 1.0, 1.0);
  State s = rest_state(ctx);
  s.vx = RealField2D(ctx.grid, 0.3);
  s.sigma_current = true;
  const Velocity u = recover_velocity(s);
  CHECK(max_diff(u.ux, s.vx) == 0.0);
}

TEST_CASE("short evolution conserves invariants and curl") {
  const auto ctx = context(64, 64, 1.5, 1.5);
  State s = gaussian_hump(ctx, 2.0);
  const Diagnostics d0 = conserved_quantities(s, {});
  for (int k = 0; k < 20; ++k) s = rk4_step(s, 0.01, {}).state;
  const Diagnostics d1 = conserved_quantities(s, {});
  CHECK(std::abs(d1.mass - d0.mass) < 1e-12 * std::abs(d0.mass));
  CHECK(std::abs(d1.energy - d0.energy) < 1e-8 * d0.energy);
  CHECK(std::abs(d1.momentum_x) < 1e-12);
  CHECK(curl_norm(s) < 1e-10);
}

TEST_CASE("the x <-> y swap symmetry is preserved") {
  const auto ctx = context(32, 32, 1.0, 1.0);
  State s = crossing_waves(ctx, 1.3);
  for (int k = 0; k < 5; ++k) s = rk4_step(s, 0.02, {}).state;
  double asym = 0.0;
  for (std::size_t i = 0; i < 32; ++i) {
    for (std::size_t j = 0; j < 32; ++j) {
      asym = std::max(asym, std::abs(s.h(i, j) - s.h(j, i)));
      asym = std::max(asym, std::abs(s.vx(i, j) - s.vy(j, i)));
    }
  }
  CHECK(asym < 1e-12);
}

TEST_CASE("invalid inputs are rejected") {
  const auto ctx = context(16, 16, 1.0, 1.0);
  State s = rest_state(ctx);
  CHECK_THROWS_AS(rk4_step(s, 0.0, {}), ConfigError);
  s.h(3, 3) = 0.0;
  CHECK_THROWS_AS(rk4_step(s, 0.1, {}), CavitationError);
  s = rest_state(ctx);
  s.vx(1, 1) = std::nan("");
  CHECK_THROWS_AS(rk4_step(s, 0.1, {}), NonFiniteError);
  CHECK_THROWS_AS(PhysicalParams({0.0, 1.0}).validate(), ConfigError);
}

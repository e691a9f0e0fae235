#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sgn/analysis.hpp"
#include "sgn/errors.hpp"
#include "sgn/initdata.hpp"
#include "sgn/nelder_mead.hpp"
#include "sgn/radial.hpp"
#include "sgn/spectral.hpp"

using namespace sgn;

TEST_CASE("crest refinement recovers an off-grid maximum") {
  const GridPtr g = make_grid(256, 8, 4.0, 1.0);
  const double xs = 0.3 * g->dx() + 1.234;
  const auto h = test::sample(g, [&](double x, double) { return 1.0 + 0.8 * std::exp(-(x - xs) * (x - xs)); });
  const Crest c = locate_crest(h);
  CHECK(std::abs(c.x - xs) < 1e-3 * g->dx() * 10);
  CHECK(c.h_max >= c.h_max_grid);
  CHECK(c.h_max == doctest::Approx(1.8).epsilon(1e-5));
}

TEST_CASE("crest refinement wraps around the periodic seam") {
  const GridPtr g = make_grid(64, 8, 1.0, 1.0);
  RealField2D h(g, 1.0);
  h(0, 3) = 2.0;
  h(63, 3) = 1.5;
  h(1, 3) = 1.2;
  const Crest c = locate_crest(h);
  CHECK(c.x < g->x()[0]);
  CHECK(c.y == g->y()[3]);
}

TEST_CASE("speed from crest height") {
  CHECK(fit_speed(2.89) == doctest::Approx(1.7));
  CHECK_THROWS_AS(fit_speed(0.9), ConfigError);
}

TEST_CASE("difference to the generating line wave is small") {
  const InitContext ctx{make_grid(512, 8, 10.0, 1.0), {}, {}};
  const State s = line_wave_2d(ctx, 1.7, 2.0);
  const LineWaveDiff d = diff_line_wave(s, 1.7, 2.0);
  CHECK(d.max_dh < 1e-12);
  CHECK(d.max_dux < 1e-9);
  CHECK(d.max_uy < 1e-14);
  const LineWaveDiff off = diff_line_wave(s, 1.7, 2.5);
  CHECK(off.max_dh > 0.1);
}

TEST_CASE("polar decomposition") {
  const GridPtr g = make_grid(32, 32, 1.0, 1.0);
  Velocity u{test::sample(g, [](double x, double) { return x; }),
             test::sample(g, [](double, double y) { return y; })};
  const PolarVelocity p = polar_velocity(u);
  for (std::size_t i = 0; i < 32; ++i) {
    for (std::size_t j = 0; j < 32; ++j) {
      const double r = std::hypot(g->x()[i], g->y()[j]);
      CHECK(p.ur(i, j) == doctest::Approx(r));
      CHECK(std::abs(p.uphi(i, j)) < 1e-14);
    }
  }
  Velocity rot{test::sample(g, [](double, double y) { return -y; }), test::sample(g, [](double x, double) { return x; })};
  const PolarVelocity q = polar_velocity(rot);
  CHECK(q.uphi(5, 7) == doctest::Approx(std::hypot(g->x()[5], g->y()[7])));
  CHECK(q.ur(16, 16) == 0.0);
}

TEST_CASE("infimum series and crossing time") {
  const InitContext ctx{make_grid(16, 16, 1.0, 1.0), {}, {}};
  std::vector<State> states;
  for (double level : {1.2, 1.1, 0.9}) {
    State s = rest_state(ctx);
    for (double& v : s.h.values()) v = level;
    s.t = static_cast<double>(states.size());
    states.push_back(std::move(s));
  }
  const TimeSeries inf = infimum_series(states);
  REQUIRE(inf.size() == 3);
  CHECK(inf[1].value == doctest::Approx(1.1));
  const auto t = first_crossing_below(inf, 1.0);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(1.5));
  CHECK_FALSE(first_crossing_below(inf, 0.5).has_value());
}

TEST_CASE("Nelder-Mead minimises the Rosenbrock function") {
  auto rosen = [](std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
  };
  const double start[2] = {-1.2, 1.0};
  const NelderMeadResult r = nelder_mead(rosen, start);
  CHECK(r.converged);
  CHECK(r.argmin[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.argmin[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("Nelder-Mead is invariant under affine rescaling of the objective") {
  auto f = [](std::span<const double> x) { return std::pow(x[0] - 0.3, 2) + 2 * std::pow(x[1] + 0.1, 2) + 0.5 * x[0] * x[1]; };
  auto g = [&](std::span<const double> x) { return 4.0 * f(x) + 7.0; };
  const double start[2] = {1.0, 1.0};
  NelderMeadOptions opt;
  opt.tol_f = 0.0;
  const auto a = nelder_mead(f, start, opt);
  const auto b = nelder_mead(g, start, opt);
  CHECK(std::abs(a.argmin[0] - b.argmin[0]) < 1e-7);
  CHECK(std::abs(a.argmin[1] - b.argmin[1]) < 1e-7);
}

TEST_CASE("Nelder-Mead reports the best point when capped") {
  auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
  const double start[2] = {1.0, 2.0};
  NelderMeadOptions opt;
  opt.max_iterations = 5;
  const auto r = nelder_mead(f, start, opt);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 5);
  CHECK(r.value < 5.0);
  CHECK(r.value == doctest::Approx(f(r.argmin)));
}

TEST_CASE("radial collapse fit recovers synthetic parameters") {
  const double a = 0.1545, b = -0.5117;
  TimeSeries s;
  for (int k = 0; k <= 250; ++k) {
    const double t = 0.02 * k;
    s.push_back({t, a / std::pow(1 + b * t, 2)});
  }
  for (FitObjective obj : {FitObjective::product, FitObjective::depth}) {
    const RadialFit f = fit_radial_collapse(s, 3.75, obj);
    CHECK(f.a == doctest::Approx(a).epsilon(1e-6));
    CHECK(f.b == doctest::Approx(b).epsilon(1e-6));
    CHECK(f.residual < 1e-8);
    CHECK(f.samples == 63);
    CHECK(f.regular);
  }
}

TEST_CASE("radial fit residual is the RMS of the misfit") {
  TimeSeries s;
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> noise(-1e-3, 1e-3);
  for (int k = 0; k < 40; ++k) {
    const double t = 4.0 + 0.025 * k;
    s.push_back({t, 0.2 / std::pow(1 - 0.1 * t, 2) + noise(rng)});
  }
  const RadialFit f = fit_radial_collapse(s, 4.0);
  double acc = 0.0;
  for (const auto& p : s) acc += std::pow(p.value * std::pow(1 + f.b * p.t, 2) - f.a, 2);
  CHECK(f.residual == doctest::Approx(std::sqrt(acc / s.size())).epsilon(1e-12));
}

TEST_CASE("radial fit needs four samples in the window") {
  const TimeSeries s{{0.0, 1.0}, {4.0, 0.5}, {4.1, 0.4}, {4.2, 0.3}};
  CHECK_THROWS_AS(fit_radial_collapse(s, 3.75), ConfigError);
}

TEST_CASE("exact radial solution has vanishing residuals") {
  for (double w0 : {-0.5117, 0.3}) {
    const RadialCollapse sol(0.1545, 1.0, w0);
    CHECK(sol.depth(0.0) == doctest::Approx(0.1545));
    CHECK(sol.velocity(1.0, 2.0) == doctest::Approx(w0 * 2.0 / (1.0 + w0)));
    for (double t : {0.0, 0.5, 1.0, 1.5}) {
      for (double r : {0.0, 0.1, 1.0, 3.0}) {
        CHECK(std::abs(sol.mass_residual(t, r)) < 1e-12);
        CHECK(std::abs(sol.momentum_residual(t, r)) < 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(RadialCollapse(-1.0, 1.0, 0.1), ConfigError);
}

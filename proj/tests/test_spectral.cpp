#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "sgn/errors.hpp"
#include "sgn/spectral.hpp"

using namespace sgn;
using sgn::test::max_diff;
using sgn::test::sample;

constexpr double kPi = std::numbers::pi;

TEST_CASE("grid construction and validation") {
  const GridPtr g = make_grid(16, 8, 2.0, 0.5);
  CHECK(g->x()[0] == doctest::Approx(-2.0 * kPi));
  CHECK(g->x()[8] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(g->dx() == doctest::Approx(4.0 * kPi / 16));
  CHECK(g->period_y() == doctest::Approx(kPi));
  CHECK(g->kx()[1] == doctest::Approx(0.5));
  CHECK(g->kx()[15] == doctest::Approx(-0.5));
  CHECK(g->ky()[4] == doctest::Approx(-8.0));
  CHECK(g->spectral_size() == 16 * 5);

  CHECK_THROWS_AS(make_grid(12, 8, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(4, 8, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(8, 8, 0.0, 1.0), ConfigError);
  CHECK_THROWS_AS(make_grid(8, 8, 1.0, -1.0), ConfigError);
}

TEST_CASE("forward and inverse transforms round trip") {
  const GridPtr g = make_grid(64, 64, 1.0, 1.0);
  const RealField2D f = test::random_smooth(g, 11, 10);
  const RealField2D back = inverse(forward(f));
  CHECK(max_diff(f, back) < 1e-13 * max_abs(f));
}

TEST_CASE("Hermitian symmetry of stored coefficients") {
  const GridPtr g = make_grid(16, 16, 1.0, 1.0);
  const auto hat = forward(test::random_smooth(g, 3));
  for (std::size_t p = 1; p < 16; ++p) {
    for (std::size_t q = 1; q < 16; ++q) {
      CHECK(std::abs(hat.coeff(p, q) - std::conj(hat.coeff(16 - p, 16 - q))) < 1e-12);
    }
  }
}

TEST_CASE("spectral derivatives of trigonometric fields") {
  const double lx = 1.5, ly = 0.75;
  const GridPtr g = make_grid(32, 16, lx, ly);
  const auto f = sample(g, [&](double x, double y) { return std::sin(2 * x / lx) * std::cos(y / ly); });
  const auto fx = sample(g, [&](double x, double y) { return 2 / lx * std::cos(2 * x / lx) * std::cos(y / ly); });
  const auto fyy = sample(g, [&](double x, double y) { return -std::sin(2 * x / lx) * std::cos(y / ly) / (ly * ly); });
  CHECK(max_diff(derivative(f, Axis::x), fx) < 1e-12);
  CHECK(max_diff(derivative(f, Axis::y, 2), fyy) < 1e-12);

  const auto [gx, gy] = gradient(f);
  CHECK(max_diff(gx, fx) < 1e-12);
  const auto lap = laplacian(f);
  const auto expect = sample(g, [&](double x, double y) {
    return -(4 / (lx * lx) + 1 / (ly * ly)) * std::sin(2 * x / lx) * std::cos(y / ly);
  });
  CHECK(max_diff(lap, expect) < 1e-11);
  CHECK(max_diff(divergence(f, f), [&] {
          RealField2D s = derivative(f, Axis::x);
          const RealField2D t = derivative(f, Axis::y);
          for (std::size_t n = 0; n < s.size(); ++n) s.values()[n] += t.values()[n];
          return s;
        }()) < 1e-12);
}

TEST_CASE("odd derivatives drop the Nyquist mode") {
  const GridPtr g = make_grid(16, 8, 1.0, 1.0);
  // cos(N/2 x) samples as (-1)^n: pure Nyquist in x.
  const auto f = sample(g, [](double x, double) { return std::cos(8.0 * x); });
  CHECK(max_abs(derivative(f, Axis::x)) < 1e-13);
  const auto f2 = derivative(f, Axis::x, 2);
  CHECK(max_diff(f2, sample(g, [](double x, double) { return -64.0 * std::cos(8.0 * x); })) < 1e-10);
}

TEST_CASE("gradient part keeps gradients and removes rotation") {
  const GridPtr g = make_grid(64, 32, 1.0, 1.0);
  const auto gx = sample(g, [](double x, double y) { return 0.3 + std::cos(x) * std::sin(2 * y); });
  const auto gy = sample(g, [](double x, double y) { return 2 * std::sin(x) * std::cos(2 * y); });
  const auto [px, py] = gradient_part(gx, gy);
  CHECK(max_diff(px, gx) < 1e-13);
  CHECK(max_diff(py, gy) < 1e-13);

  // (-psi_y, psi_x) for psi = sin(x + y) has no gradient part beyond its mean
  const auto rx = sample(g, [](double x, double y) { return -0.5 - std::cos(x + y); });
  const auto ry = sample(g, [](double x, double y) { return std::cos(x + y); });
  const auto [qx, qy] = gradient_part(rx, ry);
  CHECK(max_abs(qy) < 1e-13);
  CHECK(max_diff(qx, sample(g, [](double, double) { return -0.5; })) < 1e-13);
}

TEST_CASE("quadrature of a Gaussian is pi") {
  const GridPtr g = make_grid(128, 128, 5.0, 5.0);
  const auto f = sample(g, [](double x, double y) { return std::exp(-x * x - y * y); });
  CHECK(std::abs(integrate(f) - kPi) < 1e-10);
  CHECK(inner(f, f) == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(max_value(f) == doctest::Approx(1.0));
  CHECK(min_value(f) >= 0.0);
}

TEST_CASE("Krasny filter is relative to the largest coefficient") {
  const GridPtr g = make_grid(16, 16, 1.0, 1.0);
  auto f = sample(g, [](double x, double y) { return 1.0 + 1e-14 * std::cos(3 * x) + 0.5 * std::sin(y); });
  const auto filtered = inverse(krasny_filter(forward(f), 1e-12));
  const auto expect = sample(g, [](double, double y) { return 1.0 + 0.5 * std::sin(y); });
  CHECK(max_diff(filtered, expect) < 1e-15);

  // Scaling the whole field leaves the decision unchanged.
  for (double& v : f.values()) v *= 1e6;
  auto hat = forward(f);
  krasny_filter_in_place(hat, 1e-12);
  CHECK(std::abs(hat.coeff(3, 0)) == 0.0);
  CHECK(std::abs(hat.coeff(0, 1)) > 0.0);
}

TEST_CASE("two-thirds rule zeroes the upper third") {
  const GridPtr g = make_grid(32, 32, 1.0, 1.0);
  auto hat = forward(sample(g, [](double x, double y) { return std::cos(12 * x) + std::cos(y) + std::sin(11 * y); }));
  dealias_two_thirds(hat);
  const auto out = inverse(hat);
  CHECK(max_diff(out, sample(g, [](double, double y) { return std::cos(y); })) < 1e-13);
}

#include <cmath>
#include <vector>

#include "doctest.h"
#include "sgn/errors.hpp"
#include "sgn/gmres.hpp"

using namespace sgn;

namespace {

// Dense nonsymmetric, diagonally dominant test matrix.
struct Dense {
  std::size_t n;
  std::vector<double> a;

  explicit Dense(std::size_t n_) : n(n_), a(n_ * n_) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = i == j ? 4.0 + i : std::sin(1.0 + i + 2.0 * j) / n;
    }
  }
  void apply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a[i * n + j] * x[j];
      y[i] = s;
    }
  }
};

}  // namespace

TEST_CASE("solves a nonsymmetric system to tolerance") {
  const Dense m(50);
  std::vector<double> x_true(50), b(50), x(50, 0.0);
  for (std::size_t i = 0; i < 50; ++i) x_true[i] = std::cos(0.3 * i);
  m.apply(x_true, b);
  GmresConfig cfg;
  cfg.restart = 10;
  const auto st = gmres([&](auto in, auto out) { m.apply(in, out); }, b, x, cfg);
  CHECK(st.converged);
  CHECK(st.residual <= cfg.tolerance);
  for (std::size_t i = 0; i < 50; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-10));
}

TEST_CASE("zero right-hand side returns zero") {
  const Dense m(5);
  std::vector<double> b(5, 0.0), x(5, 3.0);
  const auto st = gmres([&](auto in, auto out) { m.apply(in, out); }, b, x, GmresConfig{});
  CHECK(st.iterations == 0);
  CHECK(st.converged);
  for (double v : x) CHECK(v == 0.0);
}

TEST_CASE("iteration cap reports non-convergence") {
  const Dense m(40);
  std::vector<double> b(40, 1.0), x(40, 0.0);
  GmresConfig cfg;
  cfg.max_iterations = 2;
  const auto st = gmres([&](auto in, auto out) { m.apply(in, out); }, b, x, cfg);
  CHECK_FALSE(st.converged);
  CHECK(st.iterations == 2);
  CHECK(st.residual > cfg.tolerance);
}

TEST_CASE("config validation") {
  GmresConfig cfg;
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.restart = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

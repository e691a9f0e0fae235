#pragma once

#include <cmath>
#include <random>

#include "sgn/field.hpp"
#include "sgn/grid.hpp"

namespace sgn::test {

template <class F>
RealField2D sample(const GridPtr& g, F f) {
  RealField2D out(g);
  for (std::size_t i = 0; i < g->nx(); ++i) {
    for (std::size_t j = 0; j < g->ny(); ++j) out(i, j) = f(g->x()[i], g->y()[j]);
  }
  return out;
}

inline double max_diff(const RealField2D& a, const RealField2D& b) {
  double m = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) m = std::max(m, std::abs(a.values()[n] - b.values()[n]));
  return m;
}

/// Random trigonometric polynomial with a few low modes, smooth on the torus.
inline RealField2D random_smooth(const GridPtr& g, unsigned seed, int modes = 4) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  RealField2D out(g);
  for (int p = 0; p <= modes; ++p) {
    for (int q = -modes; q <= modes; ++q) {
      const double a = u(rng), b = u(rng);
      for (std::size_t i = 0; i < g->nx(); ++i) {
        for (std::size_t j = 0; j < g->ny(); ++j) {
          const double ph = p * g->x()[i] / g->lx() + q * g->y()[j] / g->ly();
          out(i, j) += (a * std::cos(ph) + b * std::sin(ph)) / (1.0 + p * p + q * q);
        }
      }
    }
  }
  return out;
}

}  // namespace sgn::test

#include "sgn/solitary_wave.hpp"

#include <cmath>

#include "sgn/errors.hpp"

namespace sgn {

SolitaryWave::SolitaryWave(double c, double g, double h_inf) : c_(c), g_(g), h_inf_(h_inf) {
  if (!(g > 0.0) || !(h_inf > 0.0)) throw ConfigError("g and h_inf must be positive");
  if (!(c * c > g * h_inf)) throw ConfigError("solitary wave needs c^2 > g h_inf");
  a_ = (c * c - g * h_inf) / g;
  kappa_ = std::sqrt(3.0 * (c * c - g * h_inf)) / (2.0 * c * h_inf);
  m_ = -c * h_inf;
}

SolitaryPoint SolitaryWave::at(double xi) const {
  const double z = kappa_ * xi;
  const double th = std::tanh(z);
  const double s2 = 1.0 / (std::cosh(z) * std::cosh(z));  // underflows to 0 far out, which is fine
  const double h = h_inf_ + a_ * s2;
  const double h1 = -2.0 * a_ * kappa_ * s2 * th;
  const double h2 = 2.0 * a_ * kappa_ * kappa_ * s2 * (3.0 * th * th - 1.0);
  const double hh1 = 2.0 * h * h1;               // (h^2)'
  const double hh2 = 2.0 * (h1 * h1 + h * h2);   // (h^2)''
  return {h, c_ + m_ / h, m_ * hh1 / 6.0, c_ + m_ / h * (1.0 + hh2 / 6.0)};
}

SolitaryPoint SolitaryWave::periodic(double xi, double period) const {
  SolitaryPoint p = at(xi);
  for (const double shift : {-period, period}) {
    const SolitaryPoint q = at(xi + shift);
    p.h += q.h - h_inf_;
    p.u += q.u;
    p.sigma += q.sigma;
    p.dphi += q.dphi;
  }
  return p;
}

SolitaryProfile solitary_wave_profile(std::span<const double> xi, double c, double g, double h_inf) {
  const SolitaryWave w(c, g, h_inf);
  SolitaryProfile out;
  out.h.reserve(xi.size());
  out.u.reserve(xi.size());
  out.sigma.reserve(xi.size());
  out.dphi.reserve(xi.size());
  for (double x : xi) {
    const auto p = w.at(x);
    out.h.push_back(p.h);
    out.u.push_back(p.u);
    out.sigma.push_back(p.sigma);
    out.dphi.push_back(p.dphi);
  }
  return out;
}

}  // namespace sgn

#pragma once

namespace sgn {

/// Spatially flat radial solution h = h0 / (c0 + w0 t)^2, u = w0 r / (c0 + w0 t)
/// of (r h)_t + (r h u)_r = 0, h (u_t + u u_r) + p_r = 0 with the SGN
/// pressure p = g h^2 / 2 + h^2 (d^2 h / dt^2) / 3, d/dt = d_t + u d_r.
class RadialCollapse {
 public:
  RadialCollapse(double h0, double c0, double w0, double g = 1.0);

  double depth(double t) const;
  double velocity(double t, double r) const;

  /// Residuals of the two radial equations, every derivative taken by
  /// forward-mode automatic differentiation of depth and velocity.
  double mass_residual(double t, double r) const;
  double momentum_residual(double t, double r) const;

 private:
  double h0_, c0_, w0_, g_;
};

}  // namespace sgn

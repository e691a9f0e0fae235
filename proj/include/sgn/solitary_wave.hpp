#pragma once

#include <span>
#include <vector>

namespace sgn {

/// Pointwise values of the exact 1D solitary wave in the travelling frame.
struct SolitaryPoint {
  double h;      // depth
  double u;      // depth-averaged velocity c + m/h
  double sigma;  // m (h^2)' / 6
  double dphi;   // phi' = c + (m/h)(1 + (h^2)''/6)
};

/// Exact SGN solitary wave of speed c over depth h_inf; requires c^2 > g h_inf.
///
///   h(xi) = h_inf + a sech^2(kappa xi),  a = (c^2 - g h_inf)/g,
///   kappa = sqrt(3 (c^2 - g h_inf)) / (2 c h_inf),   m = -c h_inf.
///
/// Derivatives of h^2 are evaluated in closed form.
class SolitaryWave {
 public:
  /// Throws ConfigError if c^2 <= g h_inf or g, h_inf are not positive.
  SolitaryWave(double c, double g = 1.0, double h_inf = 1.0);

  double speed() const { return c_; }
  double amplitude() const { return a_; }
  double kappa() const { return kappa_; }
  double mass_flux() const { return m_; }
  double h_inf() const { return h_inf_; }

  SolitaryPoint at(double xi) const;

  /// Sum of the wave and its images at xi +/- period, for comparisons on a
  /// periodic domain (h_inf and zero are the respective far-field levels).
  SolitaryPoint periodic(double xi, double period) const;

 private:
  double c_, g_, h_inf_, a_, kappa_, m_;
};

struct SolitaryProfile {
  std::vector<double> h, u, sigma, dphi;
};

SolitaryProfile solitary_wave_profile(std::span<const double> xi, double c, double g = 1.0, double h_inf = 1.0);

}  // namespace sgn

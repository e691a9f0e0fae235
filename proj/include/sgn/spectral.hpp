#pragma once

#include <utility>

#include "sgn/field.hpp"
#include "sgn/grid.hpp"

namespace sgn {

inline constexpr double kDefaultKrasnyThreshold = 1e-12;

SpectralField2D forward(const RealField2D& f);
RealField2D inverse(const SpectralField2D& f);

/// Multiplies by (i k)^order along `axis`. For odd orders the Nyquist
/// coefficient is set to zero; even orders use -k^2 (and k^4...) there.
SpectralField2D derivative(const SpectralField2D& f, Axis axis, int order = 1);
RealField2D derivative(const RealField2D& f, Axis axis, int order = 1);

/// Both first derivatives from a single forward transform.
std::pair<RealField2D, RealField2D> gradient(const RealField2D& f);

/// d/dx fx + d/dy fy, evaluated with one inverse transform.
RealField2D divergence(const RealField2D& fx, const RealField2D& fy);

/// Second-order spectral Laplacian, symbol -(kx^2 + ky^2).
RealField2D laplacian(const RealField2D& f);

/// Gradient part of (fx, fy): the mean plus grad of the potential whose
/// Laplacian is the divergence. Its curl vanishes under `derivative`.
std::pair<RealField2D, RealField2D> gradient_part(const RealField2D& fx, const RealField2D& fy);

/// Zeroes every coefficient whose modulus is below threshold * max modulus.
SpectralField2D krasny_filter(const SpectralField2D& f, double threshold = kDefaultKrasnyThreshold);
void krasny_filter_in_place(SpectralField2D& f, double threshold = kDefaultKrasnyThreshold);

/// Zeroes modes with |p| > Nx/3 or |q| > Ny/3 (2/3 rule). Off unless requested.
void dealias_two_thirds(SpectralField2D& f);

/// Trapezoid rule over one period: dx * dy * sum of nodal values.
double integrate(const RealField2D& f);

/// Integral of a*b; the inner product used throughout.
double inner(const RealField2D& a, const RealField2D& b);

double max_abs(const RealField2D& f);
double min_value(const RealField2D& f);
double max_value(const RealField2D& f);

}  // namespace sgn

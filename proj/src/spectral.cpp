#include "sgn/spectral.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "sgn/errors.hpp"
#include "sgn/fft.hpp"
#include "sgn/kernels.hpp"

namespace sgn {

namespace {

using cplx = std::complex<double>;

// (i k)^order, with the sign-ambiguous Nyquist mode removed for odd orders.
cplx symbol(double k, bool nyquist, int order) {
  if (order % 2 != 0 && nyquist) return 0.0;
  cplx s = 1.0;
  for (int n = 0; n < order; ++n) s *= cplx(0.0, k);
  return s;
}

std::vector<cplx> axis_symbols(const Grid& g, Axis axis, int order) {
  const bool along_x = axis == Axis::x;
  const std::size_t n = along_x ? g.nx() : g.ny_half();
  const std::size_t nyquist = along_x ? g.nx() / 2 : g.ny() / 2;
  const auto k = along_x ? g.kx() : g.ky();
  std::vector<cplx> out(n);
  for (std::size_t m = 0; m < n; ++m) out[m] = symbol(k[m], m == nyquist, order);
  return out;
}

}  // namespace

SpectralField2D forward(const RealField2D& f) {
  SpectralField2D out(f.grid_ptr());
  f.grid().fft().forward(f.values(), out.coeffs());
  return out;
}

RealField2D inverse(const SpectralField2D& f) {
  RealField2D out(f.grid_ptr());
  f.grid().fft().inverse(f.coeffs(), out.values());
  return out;
}

SpectralField2D derivative(const SpectralField2D& f, Axis axis, int order) {
  if (order < 0) throw ConfigError("derivative order must be non-negative");
  const Grid& g = f.grid();
  const auto sym = axis_symbols(g, axis, order);
  SpectralField2D out(f.grid_ptr());
  const auto nx = static_cast<std::ptrdiff_t>(g.nx());
  const std::size_t nyh = g.ny_half();
  const bool along_x = axis == Axis::x;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < nx; ++p) {
    for (std::size_t q = 0; q < nyh; ++q) {
      out.stored(p, q) = f.stored(p, q) * (along_x ? sym[p] : sym[q]);
    }
  }
  return out;
}

RealField2D derivative(const RealField2D& f, Axis axis, int order) {
  return inverse(derivative(forward(f), axis, order));
}

std::pair<RealField2D, RealField2D> gradient(const RealField2D& f) {
  const auto hat = forward(f);
  return {inverse(derivative(hat, Axis::x, 1)), inverse(derivative(hat, Axis::y, 1))};
}

RealField2D divergence(const RealField2D& fx, const RealField2D& fy) {
  require_same_grid(fx, fy);
  auto dx = derivative(forward(fx), Axis::x, 1);
  const auto dy = derivative(forward(fy), Axis::y, 1);
  auto a = dx.coeffs();
  const auto b = dy.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return inverse(dx);
}

RealField2D laplacian(const RealField2D& f) {
  const auto hat = forward(f);
  auto xx = derivative(hat, Axis::x, 2);
  const auto yy = derivative(hat, Axis::y, 2);
  auto a = xx.coeffs();
  const auto b = yy.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return inverse(xx);
}

std::pair<RealField2D, RealField2D> gradient_part(const RealField2D& fx, const RealField2D& fy) {
  require_same_grid(fx, fy);
  const Grid& g = fx.grid();
  const auto sx = axis_symbols(g, Axis::x, 1);
  const auto sy = axis_symbols(g, Axis::y, 1);
  auto ax = forward(fx);
  auto ay = forward(fy);
  const auto nx = static_cast<std::ptrdiff_t>(g.nx());
  const std::size_t nyh = g.ny_half();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < nx; ++p) {
    for (std::size_t q = 0; q < nyh; ++q) {
      // modes no first derivative sees (mean, Nyquist corners) are left alone
      const double d = std::norm(sx[p]) + std::norm(sy[q]);
      if (d == 0.0) continue;
      const cplx phi = -(sx[p] * ax.stored(p, q) + sy[q] * ay.stored(p, q)) / d;
      ax.stored(p, q) = sx[p] * phi;
      ay.stored(p, q) = sy[q] * phi;
    }
  }
  return {inverse(ax), inverse(ay)};
}

void krasny_filter_in_place(SpectralField2D& f, double threshold) {
  if (!(threshold >= 0.0)) throw ConfigError("Krasny threshold must be non-negative");
  const double cut = threshold * kernels::omp::max_modulus(f.coeffs());
  kernels::omp::zero_below(cut, f.coeffs());
}

SpectralField2D krasny_filter(const SpectralField2D& f, double threshold) {
  SpectralField2D out = f;
  krasny_filter_in_place(out, threshold);
  return out;
}

void dealias_two_thirds(SpectralField2D& f) {
  const Grid& g = f.grid();
  const auto nx = static_cast<long>(g.nx());
  const auto ny = static_cast<long>(g.ny());
  for (long p = 0; p < nx; ++p) {
    const long mp = p < nx / 2 ? p : p - nx;
    for (long q = 0; q < static_cast<long>(g.ny_half()); ++q) {
      if (3 * std::abs(mp) > nx || 3 * q > ny) f.stored(p, q) = 0.0;
    }
  }
}

double integrate(const RealField2D& f) { return f.grid().cell_area() * kernels::omp::sum(f.values()); }

double inner(const RealField2D& a, const RealField2D& b) {
  require_same_grid(a, b);
  return a.grid().cell_area() * kernels::omp::dot(a.values(), b.values());
}

double max_abs(const RealField2D& f) { return kernels::omp::max_abs(f.values()); }
double min_value(const RealField2D& f) { return kernels::omp::min_value(f.values()); }
double max_value(const RealField2D& f) { return kernels::omp::max_value(f.values()); }

}  // namespace sgn

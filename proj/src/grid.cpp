#include "sgn/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "sgn/errors.hpp"
#include "sgn/fft.hpp"
#include "sgn/field.hpp"

namespace sgn {

namespace {

void check_count(std::size_t n, const char* name) {
  if (n < 8 || !std::has_single_bit(n)) {
    throw ConfigError(std::string(name) + " must be a power of two >= 8, got " + std::to_string(n));
  }
}

void check_period(double l, const char* name) {
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw ConfigError(std::string(name) + " must be positive and finite");
  }
}

std::vector<double> nodes(std::size_t n, double l) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = l * (-std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  return out;
}

std::vector<double> wavenumbers(std::size_t n, double l) {
  std::vector<double> out(n);
  const auto half = static_cast<long>(n / 2);
  for (std::size_t k = 0; k < n; ++k) {
    long m = static_cast<long>(k);
    if (m >= half) m -= static_cast<long>(n);
    out[k] = static_cast<double>(m) / l;
  }
  return out;
}

}  // namespace

Grid::Grid(std::size_t nx, std::size_t ny, double lx, double ly)
    : nx_(nx),
      ny_(ny),
      lx_(lx),
      ly_(ly),
      x_(nodes(nx, lx)),
      y_(nodes(ny, ly)),
      kx_(wavenumbers(nx, lx)),
      ky_(wavenumbers(ny, ly)),
      fft_(std::make_unique<Fft>(nx, ny)) {}

Grid::~Grid() = default;

GridPtr Grid::make(std::size_t nx, std::size_t ny, double lx, double ly) {
  check_count(nx, "Nx");
  check_count(ny, "Ny");
  check_period(lx, "Lx");
  check_period(ly, "Ly");
  return GridPtr(new Grid(nx, ny, lx, ly));
}

double Grid::period_x() const { return 2.0 * std::numbers::pi * lx_; }
double Grid::period_y() const { return 2.0 * std::numbers::pi * ly_; }
double Grid::dx() const { return period_x() / static_cast<double>(nx_); }
double Grid::dy() const { return period_y() / static_cast<double>(ny_); }

bool same_shape(const Grid& a, const Grid& b) {
  return &a == &b || (a.nx() == b.nx() && a.ny() == b.ny() && a.lx() == b.lx() && a.ly() == b.ly());
}

}  // namespace sgn

// Field storage lives here as well; it has no logic beyond bookkeeping.
namespace sgn {

RealField2D::RealField2D(GridPtr grid, double fill)
    : grid_(std::move(grid)), ny_(grid_->ny()), values_(grid_->size(), fill) {}

RealField2D::RealField2D(GridPtr grid, std::span<const double> values)
    : grid_(std::move(grid)), ny_(grid_->ny()), values_(values.begin(), values.end()) {
  if (values_.size() != grid_->size()) {
    throw ConfigError("field value count does not match grid size");
  }
}

SpectralField2D::SpectralField2D(GridPtr grid)
    : grid_(std::move(grid)), nyh_(grid_->ny_half()), coeffs_(grid_->spectral_size()) {}

std::complex<double> SpectralField2D::coeff(std::size_t p, std::size_t q) const {
  if (q < nyh_) return stored(p, q);
  const std::size_t nx = grid_->nx();
  const std::size_t ny = grid_->ny();
  return std::conj(stored((nx - p) % nx, ny - q));
}

void require_same_grid(const RealField2D& a, const RealField2D& b) {
  if (a.empty() || b.empty() || !same_shape(a.grid(), b.grid())) {
    throw ConfigError("fields are defined on different grids");
  }
}

void require_finite(const RealField2D& f, const char* what) {
  for (double v : f.values()) {
    if (!std::isfinite(v)) throw NonFiniteError(std::string("non-finite value in ") + what);
  }
}

}  // namespace sgn

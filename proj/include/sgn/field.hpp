#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sgn/aligned.hpp"
#include "sgn/grid.hpp"

namespace sgn {

/// Nodal samples of a real scalar field, row-major: value(i, j) at (x_i, y_j).
class RealField2D {
 public:
  RealField2D() = default;
  explicit RealField2D(GridPtr grid, double fill = 0.0);
  RealField2D(GridPtr grid, std::span<const double> values);

  const GridPtr& grid_ptr() const { return grid_; }
  const Grid& grid() const { return *grid_; }
  bool empty() const { return !grid_; }

  double& operator()(std::size_t i, std::size_t j) { return values_[i * ny_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * ny_ + j]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  GridPtr grid_;
  std::size_t ny_ = 0;
  aligned_vector<double> values_;
};

/// DFT coefficients of a real field.
///
/// Only the half spectrum 0 <= q <= Ny/2 is stored; coefficients with q > Ny/2
/// follow from Hermitian symmetry, c(-p, -q) = conj(c(p, q)). The forward
/// transform is unnormalized and indexed from the first grid node, so a mode's
/// phase differs from the continuous Fourier coefficient by (-1)^(p+q). None of
/// the multiplier operations depend on that phase.
class SpectralField2D {
 public:
  SpectralField2D() = default;
  explicit SpectralField2D(GridPtr grid);

  const GridPtr& grid_ptr() const { return grid_; }
  const Grid& grid() const { return *grid_; }

  /// Stored coefficient, 0 <= p < Nx, 0 <= q <= Ny/2.
  std::complex<double>& stored(std::size_t p, std::size_t q) { return coeffs_[p * nyh_ + q]; }
  std::complex<double> stored(std::size_t p, std::size_t q) const { return coeffs_[p * nyh_ + q]; }

  /// Any coefficient in FFT index order, 0 <= p < Nx, 0 <= q < Ny.
  std::complex<double> coeff(std::size_t p, std::size_t q) const;

  std::span<std::complex<double>> coeffs() { return coeffs_; }
  std::span<const std::complex<double>> coeffs() const { return coeffs_; }

 private:
  GridPtr grid_;
  std::size_t nyh_ = 0;
  aligned_vector<std::complex<double>> coeffs_;
};

/// Throws ConfigError if the fields live on differently shaped grids.
void require_same_grid(const RealField2D& a, const RealField2D& b);

/// Throws NonFiniteError naming `what` if any entry is NaN or infinite.
void require_finite(const RealField2D& f, const char* what);

}  // namespace sgn

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace sgn {

class Fft;
class Grid;

using GridPtr = std::shared_ptr<const Grid>;

enum class Axis { x, y };

/// Periodic collocation grid on [-pi*Lx, pi*Lx) x [-pi*Ly, pi*Ly).
///
/// Nodes are x_n = Lx * (-pi + 2*pi*n/Nx), n = 0..Nx-1 (same in y). Wavenumbers
/// are stored in FFT order: 0, 1, ..., N/2-1, -N/2, ..., -1, all divided by L.
/// Index N/2 is the Nyquist mode.
///
/// A grid owns the FFT plans for its shape, so it is always handled through a
/// shared pointer and fields keep their grid alive.
class Grid {
 public:
  /// Throws ConfigError unless Nx, Ny are powers of two >= 8 and Lx, Ly > 0.
  static GridPtr make(std::size_t nx, std::size_t ny, double lx, double ly);

  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double lx() const { return lx_; }
  double ly() const { return ly_; }

  std::size_t size() const { return nx_ * ny_; }
  /// Width of the half spectrum stored by real-to-complex transforms.
  std::size_t ny_half() const { return ny_ / 2 + 1; }
  std::size_t spectral_size() const { return nx_ * ny_half(); }

  std::size_t index(std::size_t i, std::size_t j) const { return i * ny_ + j; }

  std::span<const double> x() const { return x_; }
  std::span<const double> y() const { return y_; }
  std::span<const double> kx() const { return kx_; }
  std::span<const double> ky() const { return ky_; }

  double dx() const;
  double dy() const;
  double period_x() const;
  double period_y() const;
  double cell_area() const { return dx() * dy(); }

  const Fft& fft() const { return *fft_; }

  Grid(const Grid&) = delete;
  Grid& operator=(const Grid&) = delete;
  ~Grid();

 private:
  Grid(std::size_t nx, std::size_t ny, double lx, double ly);

  std::size_t nx_;
  std::size_t ny_;
  double lx_;
  double ly_;
  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> kx_;
  std::vector<double> ky_;
  std::unique_ptr<Fft> fft_;
};

/// Free-function form of Grid::make.
inline GridPtr make_grid(std::size_t nx, std::size_t ny, double lx, double ly) {
  return Grid::make(nx, ny, lx, ly);
}

/// True when both grids describe the same collocation points.
bool same_shape(const Grid& a, const Grid& b);

}  // namespace sgn

#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace sgn {

/// FFTW real-to-complex / complex-to-real plans for one grid shape.
///
/// Plans are built with FFTW_ESTIMATE, so the chosen algorithm (and the
/// rounding of every transform) is reproducible from run to run. Execution uses
/// the new-array interface and is safe to call concurrently.
class Fft {
 public:
  Fft(std::size_t nx, std::size_t ny);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  /// Unnormalized forward transform; `out` has Nx*(Ny/2+1) entries.
  void forward(std::span<const double> in, std::span<std::complex<double>> out) const;
  /// Inverse transform including the 1/(Nx*Ny) factor. `in` is not modified.
  void inverse(std::span<const std::complex<double>> in, std::span<double> out) const;
  /// As inverse(), but uses `in` as scratch space and leaves it undefined.
  void inverse_destructive(std::span<std::complex<double>> in, std::span<double> out) const;

 private:
  std::size_t nx_;
  std::size_t ny_;
  void* r2c_ = nullptr;
  void* c2r_ = nullptr;
};

}  // namespace sgn

#include "sgn/fft.hpp"

#include <fftw3.h>
#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <vector>

#include "sgn/aligned.hpp"
#include "sgn/kernels.hpp"

namespace sgn {

namespace {

// The FFTW planner is not thread safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void init_threads_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { fftw_init_threads(); });
}

fftw_complex* as_fftw(std::complex<double>* p) { return reinterpret_cast<fftw_complex*>(p); }

bool aligned(const void* p) { return reinterpret_cast<std::uintptr_t>(p) % kAlignment == 0; }

}  // namespace

Fft::Fft(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
  init_threads_once();
  std::lock_guard lock(planner_mutex());
  fftw_plan_with_nthreads(omp_get_max_threads());

  const auto n0 = static_cast<int>(nx);
  const auto n1 = static_cast<int>(ny);
  aligned_vector<double> real(nx * ny);
  aligned_vector<std::complex<double>> spec(nx * (ny / 2 + 1));
  const unsigned flags = FFTW_ESTIMATE;
  r2c_ = fftw_plan_dft_r2c_2d(n0, n1, real.data(), as_fftw(spec.data()), flags);
  c2r_ = fftw_plan_dft_c2r_2d(n0, n1, as_fftw(spec.data()), real.data(), flags | FFTW_DESTROY_INPUT);
}

Fft::~Fft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(r2c_));
  fftw_destroy_plan(static_cast<fftw_plan>(c2r_));
}

void Fft::forward(std::span<const double> in, std::span<std::complex<double>> out) const {
  // r2c plans never write to their input.
  auto* src = const_cast<double*>(in.data());
  if (aligned(src) && aligned(out.data())) {
    fftw_execute_dft_r2c(static_cast<fftw_plan>(r2c_), src, as_fftw(out.data()));
    return;
  }
  thread_local aligned_vector<double> a;
  thread_local aligned_vector<std::complex<double>> b;
  a.assign(in.begin(), in.end());
  b.resize(out.size());
  fftw_execute_dft_r2c(static_cast<fftw_plan>(r2c_), a.data(), as_fftw(b.data()));
  std::copy(b.begin(), b.end(), out.begin());
}

void Fft::inverse(std::span<const std::complex<double>> in, std::span<double> out) const {
  thread_local aligned_vector<std::complex<double>> scratch;
  scratch.assign(in.begin(), in.end());
  inverse_destructive(scratch, out);
}

void Fft::inverse_destructive(std::span<std::complex<double>> in, std::span<double> out) const {
  if (aligned(in.data()) && aligned(out.data())) {
    fftw_execute_dft_c2r(static_cast<fftw_plan>(c2r_), as_fftw(in.data()), out.data());
  } else {
    thread_local aligned_vector<std::complex<double>> a;
    thread_local aligned_vector<double> b;
    a.assign(in.begin(), in.end());
    b.resize(out.size());
    fftw_execute_dft_c2r(static_cast<fftw_plan>(c2r_), as_fftw(a.data()), b.data());
    std::copy(b.begin(), b.end(), out.begin());
  }
  const double norm = 1.0 / static_cast<double>(nx_ * ny_);
  kernels::omp::scale(norm, out);
}

}  // namespace sgn

#pragma once

// Pointwise and reduction kernels used by every solver module.
//
// Each kernel exists twice: `serial::` is the straight-line reference and
// `omp::` is the OpenMP version the solver calls. Both must agree bitwise;
// tests/test_kernels.cpp checks that and bench/bench_kernels.cpp times them.
//
// Reductions split the input into fixed blocks of kReductionBlock entries,
// sum each block left to right and combine the block sums pairwise, so the
// result does not depend on the number of threads.

#include <complex>
#include <cstddef>
#include <span>

namespace sgn::kernels {

inline constexpr std::size_t kReductionBlock = 2048;

using cspan = std::span<const double>;
using mspan = std::span<double>;
using ccspan = std::span<const std::complex<double>>;
using cmspan = std::span<std::complex<double>>;

/// Pointwise quantities entering the sigma operator at one node.
struct SigmaTerms {
  mspan reaction;  // 3 sigma / h^3
  mspan flux_x;    // sigma_x / h
  mspan flux_y;    // sigma_y / h
};

namespace serial {
void axpy(double a, cspan x, mspan y);
void lincomb(cspan x, double a, cspan y, mspan out);  // out = x + a*y
void scale(double a, mspan x);
void multiply(cspan a, cspan b, mspan out);
double sum(cspan x);
double dot(cspan x, cspan y);
double max_abs(cspan x);
double min_value(cspan x);
double max_value(cspan x);
void sigma_terms(cspan h, cspan sigma, cspan sigma_x, cspan sigma_y, SigmaTerms out);
/// |v|^2/2 - |grad sigma|^2/(2h^2) + g h - 9 sigma^2/(2 h^4)
void bernoulli(cspan h, cspan vx, cspan vy, cspan sigma, cspan sigma_x, cspan sigma_y, double g,
               mspan out);
/// out = y0 + dt/6 (k1 + 2 k2 + 2 k3 + k4)
void rk4_combine(cspan y0, cspan k1, cspan k2, cspan k3, cspan k4, double dt, mspan out);
double max_modulus(ccspan c);
/// Sets entries with modulus < threshold to zero; returns how many were zeroed.
std::size_t zero_below(double threshold, cmspan c);
}  // namespace serial

namespace omp {
void axpy(double a, cspan x, mspan y);
void lincomb(cspan x, double a, cspan y, mspan out);  // out = x + a*y
void scale(double a, mspan x);
void multiply(cspan a, cspan b, mspan out);
double sum(cspan x);
double dot(cspan x, cspan y);
double max_abs(cspan x);
double min_value(cspan x);
double max_value(cspan x);
void sigma_terms(cspan h, cspan sigma, cspan sigma_x, cspan sigma_y, SigmaTerms out);
/// |v|^2/2 - |grad sigma|^2/(2h^2) + g h - 9 sigma^2/(2 h^4)
void bernoulli(cspan h, cspan vx, cspan vy, cspan sigma, cspan sigma_x, cspan sigma_y, double g,
               mspan out);
/// out = y0 + dt/6 (k1 + 2 k2 + 2 k3 + k4)
void rk4_combine(cspan y0, cspan k1, cspan k2, cspan k3, cspan k4, double dt, mspan out);
double max_modulus(ccspan c);
/// Sets entries with modulus < threshold to zero; returns how many were zeroed.
std::size_t zero_below(double threshold, cmspan c);
}  // namespace omp

/// Number of threads the OpenMP kernels will use.
int thread_count();

}  // namespace sgn::kernels

#include "sgn/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace sgn::kernels {

namespace {

using std::size_t;

size_t block_count(size_t n) { return (n + kReductionBlock - 1) / kReductionBlock; }

// Pairwise combination of block partials, in place.
double combine(std::vector<double>& partials) {
  if (partials.empty()) return 0.0;
  size_t n = partials.size();
  while (n > 1) {
    const size_t half = n / 2;
    for (size_t i = 0; i < half; ++i) partials[i] = partials[2 * i] + partials[2 * i + 1];
    if (n % 2 != 0) partials[half] = partials[n - 1];
    n = half + n % 2;
  }
  return partials[0];
}

// Sum of x[begin, end) (times y when given) with four interleaved
// accumulators; the association order is fixed, so both kernel families get
// identical bits.
inline double block_sum(const double* x, size_t begin, size_t end) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    s0 += x[i];
    s1 += x[i + 1];
    s2 += x[i + 2];
    s3 += x[i + 3];
  }
  for (; i < end; ++i) s0 += x[i];
  return (s0 + s1) + (s2 + s3);
}

inline double block_dot(const double* x, const double* y, size_t begin, size_t end) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  size_t i = begin;
  for (; i + 4 <= end; i += 4) {
    s0 += x[i] * y[i];
    s1 += x[i + 1] * y[i + 1];
    s2 += x[i + 2] * y[i + 2];
    s3 += x[i + 3] * y[i + 3];
  }
  for (; i < end; ++i) s0 += x[i] * y[i];
  return (s0 + s1) + (s2 + s3);
}

inline void sigma_node(double h, double s, double sx, double sy, double& r, double& fx, double& fy) {
  const double inv = 1.0 / h;
  r = 3.0 * s * inv * inv * inv;
  fx = sx * inv;
  fy = sy * inv;
}

inline double bernoulli_node(double h, double vx, double vy, double s, double sx, double sy, double g) {
  const double inv = 1.0 / h;
  const double inv2 = inv * inv;
  return 0.5 * (vx * vx + vy * vy) - 0.5 * (sx * sx + sy * sy) * inv2 + g * h - 4.5 * s * s * inv2 * inv2;
}

inline double rk4_node(double y0, double k1, double k2, double k3, double k4, double dt) {
  return y0 + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

int thread_count() { return omp_get_max_threads(); }

// ---------------------------------------------------------------------------
// Serial reference
// ---------------------------------------------------------------------------
namespace serial {

void axpy(double a, cspan x, mspan y) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void lincomb(cspan x, double a, cspan y, mspan out) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = x[i] + a * y[i];
}

void scale(double a, mspan x) {
  for (double& v : x) v *= a;
}

void multiply(cspan a, cspan b, mspan out) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] * b[i];
}

double sum(cspan x) {
  std::vector<double> partials(block_count(x.size()));
  for (size_t b = 0; b < partials.size(); ++b) {
    const size_t begin = b * kReductionBlock;
    partials[b] = block_sum(x.data(), begin, std::min(x.size(), begin + kReductionBlock));
  }
  return combine(partials);
}

double dot(cspan x, cspan y) {
  std::vector<double> partials(block_count(x.size()));
  for (size_t b = 0; b < partials.size(); ++b) {
    const size_t begin = b * kReductionBlock;
    partials[b] = block_dot(x.data(), y.data(), begin, std::min(x.size(), begin + kReductionBlock));
  }
  return combine(partials);
}

double max_abs(cspan x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double min_value(cspan x) {
  double m = std::numeric_limits<double>::infinity();
  for (double v : x) m = std::min(m, v);
  return m;
}

double max_value(cspan x) {
  double m = -std::numeric_limits<double>::infinity();
  for (double v : x) m = std::max(m, v);
  return m;
}

void sigma_terms(cspan h, cspan sigma, cspan sigma_x, cspan sigma_y, SigmaTerms out) {
  for (size_t i = 0; i < h.size(); ++i) {
    sigma_node(h[i], sigma[i], sigma_x[i], sigma_y[i], out.reaction[i], out.flux_x[i], out.flux_y[i]);
  }
}

void bernoulli(cspan h, cspan vx, cspan vy, cspan sigma, cspan sigma_x, cspan sigma_y, double g,
               mspan out) {
  for (size_t i = 0; i < h.size(); ++i) {
    out[i] = bernoulli_node(h[i], vx[i], vy[i], sigma[i], sigma_x[i], sigma_y[i], g);
  }
}

void rk4_combine(cspan y0, cspan k1, cspan k2, cspan k3, cspan k4, double dt, mspan out) {
  for (size_t i = 0; i < out.size(); ++i) out[i] = rk4_node(y0[i], k1[i], k2[i], k3[i], k4[i], dt);
}

double max_modulus(ccspan c) {
  double m = 0.0;
  for (const auto& z : c) m = std::max(m, std::abs(z));
  return m;
}

size_t zero_below(double threshold, cmspan c) {
  size_t count = 0;
  for (auto& z : c) {
    if (std::abs(z) < threshold) {
      z = 0.0;
      ++count;
    }
  }
  return count;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP
// ---------------------------------------------------------------------------
namespace omp {

void axpy(double a, cspan x, mspan y) {
  const auto n = static_cast<std::ptrdiff_t>(y.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void lincomb(cspan x, double a, cspan y, mspan out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = x[i] + a * y[i];
}

void scale(double a, mspan x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) x[i] *= a;
}

void multiply(cspan a, cspan b, mspan out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

double sum(cspan x) {
  std::vector<double> partials(block_count(x.size()));
  const auto nb = static_cast<std::ptrdiff_t>(partials.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const size_t begin = static_cast<size_t>(b) * kReductionBlock;
    partials[b] = block_sum(x.data(), begin, std::min(x.size(), begin + kReductionBlock));
  }
  return combine(partials);
}

double dot(cspan x, cspan y) {
  std::vector<double> partials(block_count(x.size()));
  const auto nb = static_cast<std::ptrdiff_t>(partials.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const size_t begin = static_cast<size_t>(b) * kReductionBlock;
    partials[b] = block_dot(x.data(), y.data(), begin, std::min(x.size(), begin + kReductionBlock));
  }
  return combine(partials);
}

double max_abs(cspan x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

double min_value(cspan x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(min : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::min(m, x[i]);
  return m;
}

double max_value(cspan x) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  double m = -std::numeric_limits<double>::infinity();
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

void sigma_terms(cspan h, cspan sigma, cspan sigma_x, cspan sigma_y, SigmaTerms out) {
  const auto n = static_cast<std::ptrdiff_t>(h.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    sigma_node(h[i], sigma[i], sigma_x[i], sigma_y[i], out.reaction[i], out.flux_x[i], out.flux_y[i]);
  }
}

void bernoulli(cspan h, cspan vx, cspan vy, cspan sigma, cspan sigma_x, cspan sigma_y, double g,
               mspan out) {
  const auto n = static_cast<std::ptrdiff_t>(h.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = bernoulli_node(h[i], vx[i], vy[i], sigma[i], sigma_x[i], sigma_y[i], g);
  }
}

void rk4_combine(cspan y0, cspan k1, cspan k2, cspan k3, cspan k4, double dt, mspan out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = rk4_node(y0[i], k1[i], k2[i], k3[i], k4[i], dt);
}

double max_modulus(ccspan c) {
  const auto n = static_cast<std::ptrdiff_t>(c.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(c[i]));
  return m;
}

size_t zero_below(double threshold, cmspan c) {
  const auto n = static_cast<std::ptrdiff_t>(c.size());
  size_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (std::abs(c[i]) < threshold) {
      c[i] = 0.0;
      ++count;
    }
  }
  return count;
}

}  // namespace omp

}  // namespace sgn::kernels

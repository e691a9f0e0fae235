// Serial reference kernels against their OpenMP versions.
//
//   bench_kernels [--benchmark_filter=...]
//
// Sizes are square grids from 128^2 to 1024^2.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "sgn/kernels.hpp"

namespace k = sgn::kernels;

namespace {

std::vector<double> random_field(std::size_t n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::size_t nodes(const benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  return n * n;
}

template <bool Omp>
void BM_dot(benchmark::State& st) {
  const std::size_t n = nodes(st);
  const auto x = random_field(n, -1, 1, 1), y = random_field(n, -1, 1, 2);
  for (auto _ : st) benchmark::DoNotOptimize(Omp ? k::omp::dot(x, y) : k::serial::dot(x, y));
  st.SetBytesProcessed(st.iterations() * 2 * n * sizeof(double));
}

template <bool Omp>
void BM_bernoulli(benchmark::State& st) {
  const std::size_t n = nodes(st);
  const auto h = random_field(n, 0.5, 2, 1), vx = random_field(n, -1, 1, 2), vy = random_field(n, -1, 1, 3);
  const auto s = random_field(n, -1, 1, 4), sx = random_field(n, -1, 1, 5), sy = random_field(n, -1, 1, 6);
  std::vector<double> out(n);
  for (auto _ : st) {
    if constexpr (Omp) k::omp::bernoulli(h, vx, vy, s, sx, sy, 1.0, out);
    else k::serial::bernoulli(h, vx, vy, s, sx, sy, 1.0, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * n);
}

template <bool Omp>
void BM_sigma_terms(benchmark::State& st) {
  const std::size_t n = nodes(st);
  const auto h = random_field(n, 0.5, 2, 1), s = random_field(n, -1, 1, 2);
  const auto sx = random_field(n, -1, 1, 3), sy = random_field(n, -1, 1, 4);
  std::vector<double> r(n), fx(n), fy(n);
  for (auto _ : st) {
    if constexpr (Omp) k::omp::sigma_terms(h, s, sx, sy, {r, fx, fy});
    else k::serial::sigma_terms(h, s, sx, sy, {r, fx, fy});
    benchmark::DoNotOptimize(r.data());
  }
  st.SetItemsProcessed(st.iterations() * n);
}

template <bool Omp>
void BM_rk4_combine(benchmark::State& st) {
  const std::size_t n = nodes(st);
  const auto y = random_field(n, -1, 1, 1), a = random_field(n, -1, 1, 2), b = random_field(n, -1, 1, 3);
  const auto c = random_field(n, -1, 1, 4), d = random_field(n, -1, 1, 5);
  std::vector<double> out(n);
  for (auto _ : st) {
    if constexpr (Omp) k::omp::rk4_combine(y, a, b, c, d, 0.01, out);
    else k::serial::rk4_combine(y, a, b, c, d, 0.01, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetBytesProcessed(st.iterations() * 6 * n * sizeof(double));
}

template <bool Omp>
void BM_zero_below(benchmark::State& st) {
  const std::size_t n = nodes(st) / 2;
  const auto re = random_field(n, -1, 1, 1), im = random_field(n, -1, 1, 2);
  std::vector<std::complex<double>> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = {re[i] * 1e-10, im[i] * 1e-10};
  for (auto _ : st) {
    benchmark::DoNotOptimize(Omp ? k::omp::zero_below(1e-12, c) : k::serial::zero_below(1e-12, c));
  }
  st.SetItemsProcessed(st.iterations() * n);
}

#define SGN_BENCH_PAIR(fn) \
  BENCHMARK(fn<false>)->Name(#fn "/serial")->RangeMultiplier(2)->Range(128, 1024); \
  BENCHMARK(fn<true>)->Name(#fn "/omp")->RangeMultiplier(2)->Range(128, 1024)

SGN_BENCH_PAIR(BM_dot);
SGN_BENCH_PAIR(BM_bernoulli);
SGN_BENCH_PAIR(BM_sigma_terms);
SGN_BENCH_PAIR(BM_rk4_combine);
SGN_BENCH_PAIR(BM_zero_below);

}  // namespace

BENCHMARK_MAIN();

#include "sgn/gmres.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sgn/aligned.hpp"
#include "sgn/errors.hpp"
#include "sgn/kernels.hpp"

namespace sgn {

namespace k = kernels::omp;

void GmresConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance < 1.0)) throw ConfigError("GMRES tolerance must lie in (0, 1)");
  if (restart < 1) throw ConfigError("GMRES restart dimension must be >= 1");
  if (max_iterations < 1) throw ConfigError("GMRES iteration limit must be >= 1");
}

namespace {

double norm(std::span<const double> v) { return std::sqrt(k::dot(v, v)); }

// Residual r = rhs - A x; returns ||r||.
double residual(const LinearMap& a, std::span<const double> rhs, std::span<const double> x,
                std::span<double> r) {
  a(x, r);
  k::lincomb(rhs, -1.0, r, r);
  return norm(r);
}

}  // namespace

GmresStats gmres(const LinearMap& a, std::span<const double> rhs, std::span<double> x,
                 const GmresConfig& cfg) {
  cfg.validate();
  const std::size_t n = rhs.size();
  GmresStats stats;

  const double rhs_norm = norm(rhs);
  if (rhs_norm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    stats.converged = true;
    return stats;
  }

  const auto m = static_cast<std::size_t>(cfg.restart);
  // Krylov vectors are kept per thread and only grown, so repeated solves of
  // the same size do not touch the allocator.
  thread_local std::vector<aligned_vector<double>> basis;
  if (basis.size() < m + 1) basis.resize(m + 1);
  auto ensure = [&](std::size_t j) {
    if (basis[j].size() != n) basis[j].resize(n);
  };
  ensure(0);
  std::vector<double> hess((m + 1) * m, 0.0);  // column-major, (m+1) rows
  std::vector<double> cs(m), sn(m), g(m + 1), y(m), proj(m + 1);
  thread_local aligned_vector<double> w;
  w.resize(n);
  auto H = [&](std::size_t i, std::size_t j) -> double& { return hess[j * (m + 1) + i]; };

  for (;;) {
    const double beta = residual(a, rhs, x, basis[0]);
    stats.residual = beta / rhs_norm;
    if (stats.residual <= cfg.tolerance) {
      stats.converged = true;
      return stats;
    }
    if (stats.iterations >= cfg.max_iterations) return stats;

    k::scale(1.0 / beta, basis[0]);
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;

    std::size_t cols = 0;
    for (std::size_t j = 0; j < m && stats.iterations < cfg.max_iterations; ++j) {
      a(basis[j], w);
      ++stats.iterations;

      for (std::size_t i = 0; i <= j; ++i) H(i, j) = 0.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i <= j; ++i) proj[i] = k::dot(basis[i], w);
        for (std::size_t i = 0; i <= j; ++i) {
          k::axpy(-proj[i], basis[i], w);
          H(i, j) += proj[i];
        }
      }
      const double h_next = norm(w);
      ensure(j + 1);
      H(j + 1, j) = h_next;
      if (h_next > 0.0) {
        std::copy(w.begin(), w.end(), basis[j + 1].begin());
        k::scale(1.0 / h_next, basis[j + 1]);
      }

      for (std::size_t i = 0; i < j; ++i) {
        const double t = cs[i] * H(i, j) + sn[i] * H(i + 1, j);
        H(i + 1, j) = -sn[i] * H(i, j) + cs[i] * H(i + 1, j);
        H(i, j) = t;
      }
      const double denom = std::hypot(H(j, j), H(j + 1, j));
      cs[j] = denom == 0.0 ? 1.0 : H(j, j) / denom;
      sn[j] = denom == 0.0 ? 0.0 : H(j + 1, j) / denom;
      H(j, j) = denom;
      H(j + 1, j) = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      cols = j + 1;

      if (std::abs(g[j + 1]) <= cfg.tolerance * rhs_norm || h_next == 0.0) break;
    }

    // Back substitution on the triangularized Hessenberg matrix.
    for (std::size_t ii = cols; ii-- > 0;) {
      double s = g[ii];
      for (std::size_t jj = ii + 1; jj < cols; ++jj) s -= H(ii, jj) * y[jj];
      y[ii] = H(ii, ii) == 0.0 ? 0.0 : s / H(ii, ii);
    }
    for (std::size_t i = 0; i < cols; ++i) k::axpy(y[i], basis[i], x);
  }
}

}  // namespace sgn

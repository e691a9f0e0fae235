#include "sgn/elliptic.hpp"

#include <complex>
#include <string>

#include "sgn/aligned.hpp"
#include "sgn/errors.hpp"
#include "sgn/fft.hpp"
#include "sgn/kernels.hpp"
#include "sgn/spectral.hpp"

namespace sgn {

namespace {

using cplx = std::complex<double>;

double effective_k(std::span<const double> k, std::size_t m, std::size_t nyquist) {
  return m == nyquist ? 0.0 : k[m];
}

// coeffs /= 3 + kx^2 + ky^2 (Nyquist wavenumbers treated as zero).
void divide_by_symbol(const Grid& g, std::span<cplx> coeffs) {
  const auto nx = static_cast<std::ptrdiff_t>(g.nx());
  const std::size_t nyh = g.ny_half();
  const auto kx = g.kx();
  const auto ky = g.ky();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < nx; ++p) {
    const double ax = effective_k(kx, p, g.nx() / 2);
    for (std::size_t q = 0; q < nyh; ++q) {
      const double ay = effective_k(ky, q, g.ny() / 2);
      coeffs[p * nyh + q] /= 3.0 + ax * ax + ay * ay;
    }
  }
}

// Per-thread buffers reused across operator applications.
struct Scratch {
  aligned_vector<cplx> hat, dx_hat, dy_hat;
  aligned_vector<double> sx, sy, reaction, fx, fy;

  void fit(std::size_t ns, std::size_t n) {
    for (auto* v : {&hat, &dx_hat, &dy_hat}) v->resize(ns);
    for (auto* v : {&sx, &sy, &reaction, &fx, &fy}) v->resize(n);
  }
};

Scratch& scratch_for(const Grid& g) {
  thread_local Scratch s;
  s.fit(g.spectral_size(), g.size());
  return s;
}

// Spectral coefficients of L[sigma] (before any inverse transform).
void operator_coefficients(const RealField2D& h, std::span<const double> sigma, std::span<cplx> out) {
  const Grid& g = h.grid();
  const Fft& fft = g.fft();
  const std::size_t nyh = g.ny_half();

  Scratch& w = scratch_for(g);
  auto& hat = w.hat;
  auto& dx_hat = w.dx_hat;
  auto& dy_hat = w.dy_hat;
  fft.forward(sigma, hat);
  const auto kx = g.kx();
  const auto ky = g.ky();
  const auto nx = static_cast<std::ptrdiff_t>(g.nx());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < nx; ++p) {
    const double ax = effective_k(kx, p, g.nx() / 2);
    for (std::size_t q = 0; q < nyh; ++q) {
      const double ay = effective_k(ky, q, g.ny() / 2);
      const std::size_t i = p * nyh + q;
      dx_hat[i] = cplx(0.0, ax) * hat[i];
      dy_hat[i] = cplx(0.0, ay) * hat[i];
    }
  }

  fft.inverse_destructive(dx_hat, w.sx);
  fft.inverse_destructive(dy_hat, w.sy);
  kernels::omp::sigma_terms(h.values(), sigma, w.sx, w.sy, {w.reaction, w.fx, w.fy});

  fft.forward(w.reaction, out);
  fft.forward(w.fx, dx_hat);
  fft.forward(w.fy, dy_hat);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < nx; ++p) {
    const double ax = effective_k(kx, p, g.nx() / 2);
    for (std::size_t q = 0; q < nyh; ++q) {
      const double ay = effective_k(ky, q, g.ny() / 2);
      const std::size_t i = p * nyh + q;
      out[i] -= cplx(0.0, ax) * dx_hat[i] + cplx(0.0, ay) * dy_hat[i];
    }
  }
}

}  // namespace

SigmaOperator::SigmaOperator(RealField2D h) : h_(std::move(h)) {
  require_finite(h_, "depth");
  const double hmin = min_value(h_);
  if (!(hmin > 0.0)) {
    throw CavitationError("sigma operator needs positive depth, min(h) = " + std::to_string(hmin));
  }
}

RealField2D SigmaOperator::apply(const RealField2D& sigma) const {
  require_same_grid(h_, sigma);
  thread_local aligned_vector<cplx> coeffs;
  coeffs.resize(h_.grid().spectral_size());
  operator_coefficients(h_, sigma.values(), coeffs);
  RealField2D out(h_.grid_ptr());
  h_.grid().fft().inverse_destructive(coeffs, out.values());
  return out;
}

void SigmaOperator::apply_preconditioned(std::span<const double> in, std::span<double> out) const {
  thread_local aligned_vector<cplx> coeffs;
  coeffs.resize(h_.grid().spectral_size());
  operator_coefficients(h_, in, coeffs);
  divide_by_symbol(h_.grid(), coeffs);
  h_.grid().fft().inverse_destructive(coeffs, out);
}

RealField2D precondition(const RealField2D& r) {
  auto hat = forward(r);
  divide_by_symbol(r.grid(), hat.coeffs());
  return inverse(hat);
}

RealField2D apply_sigma_operator(const SigmaOperator& op, const RealField2D& sigma) { return op.apply(sigma); }

SigmaSolution solve_sigma_rhs(const SigmaOperator& op, const RealField2D& rhs, const RealField2D& guess,
                              const GmresConfig& cfg) {
  require_same_grid(op.depth(), rhs);
  require_same_grid(op.depth(), guess);
  require_finite(rhs, "sigma right-hand side");

  const RealField2D prhs = precondition(rhs);
  SigmaSolution sol{guess, {}};
  require_finite(sol.sigma, "sigma initial guess");
  const LinearMap map = [&op](std::span<const double> x, std::span<double> y) { op.apply_preconditioned(x, y); };
  sol.stats = gmres(map, prhs.values(), sol.sigma.values(), cfg);
  if (!sol.stats.converged) {
    throw SolverError("sigma solve did not converge: " + std::to_string(sol.stats.iterations) +
                          " iterations, relative residual " + std::to_string(sol.stats.residual),
                      sol.stats);
  }
  return sol;
}

SigmaSolution solve_sigma(const RealField2D& h, const RealField2D& vx, const RealField2D& vy,
                          const RealField2D& guess, const GmresConfig& cfg) {
  require_same_grid(h, vx);
  require_same_grid(h, vy);
  const SigmaOperator op(h);
  RealField2D rhs = divergence(vx, vy);
  kernels::omp::scale(-1.0, rhs.values());
  return solve_sigma_rhs(op, rhs, guess, cfg);
}

}  // namespace sgn

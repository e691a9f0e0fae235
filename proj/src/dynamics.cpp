#include "sgn/dynamics.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sgn/aligned.hpp"
#include "sgn/errors.hpp"
#include "sgn/fft.hpp"
#include "sgn/kernels.hpp"

namespace sgn {

namespace {

using cplx = std::complex<double>;
namespace k = kernels::omp;

void check_depth(const RealField2D& h) {
  const double hmin = min_value(h);
  if (!(hmin > kCavitationDepth)) {
    throw CavitationError("cavitation: min(h) = " + std::to_string(hmin));
  }
}

const State& checked(const State& s) {
  validate_state(s);
  return s;
}

// Filters (and optionally dealiases) one prognostic field in place.
void clean(RealField2D& f, const StepOptions& opt) {
  if (opt.krasny_threshold <= 0.0 && !opt.dealias) return;
  auto hat = forward(f);
  if (opt.dealias) dealias_two_thirds(hat);
  if (opt.krasny_threshold > 0.0) krasny_filter_in_place(hat, opt.krasny_threshold);
  f = inverse(hat);
}

State stage(const State& base, const Rhs& r, double a) {
  State s;
  s.t = base.t;
  s.h = RealField2D(base.h.grid_ptr());
  s.vx = RealField2D(base.h.grid_ptr());
  s.vy = RealField2D(base.h.grid_ptr());
  k::lincomb(base.h.values(), a, r.dh.values(), s.h.values());
  k::lincomb(base.vx.values(), a, r.dvx.values(), s.vx.values());
  k::lincomb(base.vy.values(), a, r.dvy.values(), s.vy.values());
  s.sigma = r.sigma;
  return s;
}

}  // namespace

void PhysicalParams::validate() const {
  if (!(g > 0.0) || !(h_inf > 0.0)) throw ConfigError("g and h_inf must be positive");
}

void validate_state(const State& s) {
  require_same_grid(s.h, s.vx);
  require_same_grid(s.h, s.vy);
  require_same_grid(s.h, s.sigma);
  require_finite(s.h, "h");
  require_finite(s.vx, "vx");
  require_finite(s.vy, "vy");
  check_depth(s.h);
}

Rhs compute_rhs(const State& s, const PhysicalParams& p, const GmresConfig& cfg) {
  const Grid& g = s.grid();
  const Fft& fft = g.fft();
  const std::size_t ns = g.spectral_size();
  const std::size_t nyh = g.ny_half();
  const auto nx = static_cast<std::ptrdiff_t>(g.nx());
  const auto kx = g.kx();
  const auto ky = g.ky();
  auto ik = [](std::span<const double> kk, std::size_t m, std::size_t nyq) {
    return cplx(0.0, m == nyq ? 0.0 : kk[m]);
  };

  check_depth(s.h);
  const SigmaOperator op(s.h);

  // -div v
  aligned_vector<cplx> a(ns), b(ns);
  fft.forward(s.vx.values(), a);
  fft.forward(s.vy.values(), b);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t pi = 0; pi < nx; ++pi) {
    for (std::size_t q = 0; q < nyh; ++q) {
      const std::size_t i = pi * nyh + q;
      a[i] = -(ik(kx, pi, g.nx() / 2) * a[i] + ik(ky, q, g.ny() / 2) * b[i]);
    }
  }
  RealField2D rhs(s.h.grid_ptr());
  fft.inverse_destructive(a, rhs.values());

  Rhs out;
  auto sol = solve_sigma_rhs(op, rhs, s.sigma, cfg);
  out.sigma = std::move(sol.sigma);
  out.stats = sol.stats;

  // Gradient and Laplacian of sigma.
  aligned_vector<cplx> sig(ns), sx_hat(ns), sy_hat(ns);
  fft.forward(out.sigma.values(), sig);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t pi = 0; pi < nx; ++pi) {
    for (std::size_t q = 0; q < nyh; ++q) {
      const std::size_t i = pi * nyh + q;
      sx_hat[i] = ik(kx, pi, g.nx() / 2) * sig[i];
      sy_hat[i] = ik(ky, q, g.ny() / 2) * sig[i];
    }
  }
  const std::size_t n = g.size();
  aligned_vector<double> sx(n), sy(n), tmp(n);
  fft.inverse_destructive(sx_hat, sx);
  fft.inverse_destructive(sy_hat, sy);

  // h_t = div(grad sigma - h v), with the same first derivatives as the operator
  k::multiply(s.h.values(), s.vx.values(), tmp);
  fft.forward(tmp, a);
  k::multiply(s.h.values(), s.vy.values(), tmp);
  fft.forward(tmp, b);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t pi = 0; pi < nx; ++pi) {
    const cplx ikx = ik(kx, pi, g.nx() / 2);
    for (std::size_t q = 0; q < nyh; ++q) {
      const std::size_t i = pi * nyh + q;
      const cplx iky = ik(ky, q, g.ny() / 2);
      a[i] = ikx * (ikx * sig[i] - a[i]) + iky * (iky * sig[i] - b[i]);
    }
  }
  out.dh = RealField2D(s.h.grid_ptr());
  fft.inverse_destructive(a, out.dh.values());

  // v_t = -grad F
  k::bernoulli(s.h.values(), s.vx.values(), s.vy.values(), out.sigma.values(), sx, sy, p.g, tmp);
  fft.forward(tmp, a);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t pi = 0; pi < nx; ++pi) {
    for (std::size_t q = 0; q < nyh; ++q) {
      const std::size_t i = pi * nyh + q;
      b[i] = -ik(ky, q, g.ny() / 2) * a[i];
      a[i] = -ik(kx, pi, g.nx() / 2) * a[i];
    }
  }
  out.dvx = RealField2D(s.h.grid_ptr());
  out.dvy = RealField2D(s.h.grid_ptr());
  fft.inverse_destructive(a, out.dvx.values());
  fft.inverse_destructive(b, out.dvy.values());
  return out;
}

StepResult rk4_step(const State& s0, double dt, const PhysicalParams& p, const StepOptions& opt) {
  if (!(dt > 0.0)) throw ConfigError("time step must be positive");
  const State& s = checked(s0);

  const Rhs k1 = compute_rhs(s, p, opt.gmres);
  const Rhs k2 = compute_rhs(stage(s, k1, 0.5 * dt), p, opt.gmres);
  const Rhs k3 = compute_rhs(stage(s, k2, 0.5 * dt), p, opt.gmres);
  const Rhs k4 = compute_rhs(stage(s, k3, dt), p, opt.gmres);

  StepResult r;
  r.gmres_iterations = k1.stats.iterations + k2.stats.iterations + k3.stats.iterations + k4.stats.iterations;
  State& n = r.state;
  n.t = s.t + dt;
  n.h = RealField2D(s.h.grid_ptr());
  n.vx = RealField2D(s.h.grid_ptr());
  n.vy = RealField2D(s.h.grid_ptr());
  k::rk4_combine(s.h.values(), k1.dh.values(), k2.dh.values(), k3.dh.values(), k4.dh.values(), dt, n.h.values());
  k::rk4_combine(s.vx.values(), k1.dvx.values(), k2.dvx.values(), k3.dvx.values(), k4.dvx.values(), dt,
                 n.vx.values());
  k::rk4_combine(s.vy.values(), k1.dvy.values(), k2.dvy.values(), k3.dvy.values(), k4.dvy.values(), dt,
                 n.vy.values());
  clean(n.h, opt);
  clean(n.vx, opt);
  clean(n.vy, opt);
  n.sigma = k4.sigma;
  n.sigma_current = false;
  check_depth(n.h);
  return r;
}

void refresh_sigma(State& s, const GmresConfig& cfg) {
  if (s.sigma_current) return;
  auto sol = solve_sigma(s.h, s.vx, s.vy, s.sigma, cfg);
  s.sigma = std::move(sol.sigma);
  s.sigma_current = true;
}

Velocity recover_velocity(const State& s, const GmresConfig& cfg) {
  check_depth(s.h);
  const RealField2D sigma = s.sigma_current ? s.sigma : solve_sigma(s.h, s.vx, s.vy, s.sigma, cfg).sigma;
  auto [sx, sy] = gradient(sigma);
  Velocity u{RealField2D(s.h.grid_ptr()), RealField2D(s.h.grid_ptr())};
  const auto h = s.h.values();
  const auto vx = s.vx.values();
  const auto vy = s.vy.values();
  auto ux = u.ux.values();
  auto uy = u.uy.values();
  const auto gx = sx.values();
  const auto gy = sy.values();
  const auto n = static_cast<std::ptrdiff_t>(h.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    ux[i] = vx[i] - gx[i] / h[i];
    uy[i] = vy[i] - gy[i] / h[i];
  }
  return u;
}

Diagnostics conserved_quantities(const State& s, const PhysicalParams& p, const GmresConfig& cfg) {
  check_depth(s.h);
  const RealField2D sigma = s.sigma_current ? s.sigma : solve_sigma(s.h, s.vx, s.vy, s.sigma, cfg).sigma;
  State fresh{s.t, s.h, s.vx, s.vy, sigma, true};
  const Velocity u = recover_velocity(fresh, cfg);

  const auto gp = s.h.grid_ptr();
  RealField2D eta(gp), px(gp), py(gp), e(gp);
  const auto h = s.h.values();
  const auto ux = u.ux.values();
  const auto uy = u.uy.values();
  const auto sg = sigma.values();
  auto a = eta.values();
  auto bx = px.values();
  auto by = py.values();
  auto en = e.values();
  const auto n = static_cast<std::ptrdiff_t>(h.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double d = h[i] - p.h_inf;
    a[i] = d;
    bx[i] = h[i] * ux[i];
    by[i] = h[i] * uy[i];
    en[i] = 0.5 * h[i] * (ux[i] * ux[i] + uy[i] * uy[i]) + 1.5 * sg[i] * sg[i] / (h[i] * h[i] * h[i]) +
            0.5 * p.g * d * d;
  }

  Diagnostics d;
  d.t = s.t;
  d.mass = integrate(eta);
  d.momentum_x = integrate(px);
  d.momentum_y = integrate(py);
  d.energy = integrate(e);
  d.h_min = min_value(s.h);
  d.h_max = max_value(s.h);
  return d;
}

double curl_norm(const State& s) {
  const auto vx_hat = forward(s.vx);
  const auto vy_hat = forward(s.vy);
  auto c = derivative(vy_hat, Axis::x, 1);
  const auto dy = derivative(vx_hat, Axis::y, 1);
  auto cs = c.coeffs();
  const auto ds = dy.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] -= ds[i];
  return max_abs(inverse(c));
}

}  // namespace sgn

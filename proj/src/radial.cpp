#include "sgn/radial.hpp"

#include <cmath>

#include "sgn/errors.hpp"

namespace sgn {

namespace {

// First-order dual number; nesting Dual<Dual<T>> yields higher derivatives.
template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(double c) : v(c), d(0.0) {}
  Dual(T value, T deriv) : v(value), d(deriv) {}
};

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.v + b.v, a.d + b.d}; }
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.v - b.v, a.d - b.d}; }
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
template <class T>
Dual<T> operator*(double c, const Dual<T>& a) { return {c * a.v, c * a.d}; }

struct Params {
  double h0, c0, w0, g;
};

template <class T>
T depth(const Params& p, T t, T) {
  const T s = T(p.c0) + p.w0 * t;
  return T(p.h0) / (s * s);
}

template <class T>
T velocity(const Params& p, T t, T r) {
  return p.w0 * r / (T(p.c0) + p.w0 * t);
}

// Partial derivatives of f(t, r) along t (which = 0) or r (which = 1).
template <class T, class F>
T partial(F f, T t, T r, int which) {
  using D = Dual<T>;
  const D dt = which == 0 ? D(t, T(1.0)) : D(t, T(0.0));
  const D dr = which == 1 ? D(r, T(1.0)) : D(r, T(0.0));
  return f(dt, dr).d;
}

template <class T>
T material_rate(const Params& p, T t, T r) {
  auto h = [&](auto a, auto b) { return depth(p, a, b); };
  return partial(h, t, r, 0) + velocity(p, t, r) * partial(h, t, r, 1);
}

template <class T>
T material_accel(const Params& p, T t, T r) {
  auto hd = [&](auto a, auto b) { return material_rate(p, a, b); };
  return partial(hd, t, r, 0) + velocity(p, t, r) * partial(hd, t, r, 1);
}

template <class T>
T pressure(const Params& p, T t, T r) {
  const T h = depth(p, t, r);
  return 0.5 * p.g * h * h + (1.0 / 3.0) * h * h * material_accel(p, t, r);
}

}  // namespace

RadialCollapse::RadialCollapse(double h0, double c0, double w0, double g) : h0_(h0), c0_(c0), w0_(w0), g_(g) {
  if (!(h0 > 0.0) || !std::isfinite(c0) || !std::isfinite(w0) || !(g > 0.0)) {
    throw ConfigError("radial solution needs h0 > 0, finite c0, w0 and g > 0");
  }
}

double RadialCollapse::depth(double t) const { return sgn::depth(Params{h0_, c0_, w0_, g_}, t, 0.0); }

double RadialCollapse::velocity(double t, double r) const {
  return sgn::velocity(Params{h0_, c0_, w0_, g_}, t, r);
}

double RadialCollapse::mass_residual(double t, double r) const {
  const Params p{h0_, c0_, w0_, g_};
  auto rh = [&](auto a, auto b) { return b * sgn::depth(p, a, b); };
  auto rhu = [&](auto a, auto b) { return b * sgn::depth(p, a, b) * sgn::velocity(p, a, b); };
  return partial(rh, t, r, 0) + partial(rhu, t, r, 1);
}

double RadialCollapse::momentum_residual(double t, double r) const {
  const Params p{h0_, c0_, w0_, g_};
  auto u = [&](auto a, auto b) { return sgn::velocity(p, a, b); };
  auto pr = [&](auto a, auto b) { return pressure(p, a, b); };
  const double h = sgn::depth(p, t, r);
  return h * (partial(u, t, r, 0) + sgn::velocity(p, t, r) * partial(u, t, r, 1)) + partial(pr, t, r, 1);
}

}  // namespace sgn

#include "sgn/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgn/errors.hpp"

namespace sgn {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

std::vector<double> affine(const std::vector<double>& c, const std::vector<double>& x, double t) {
  std::vector<double> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] + t * (x[i] - c[i]);
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start, const NelderMeadOptions& opt) {
  const std::size_t n = start.size();
  if (n == 0) throw ConfigError("nelder_mead: empty start point");
  if (!(opt.tol_x >= 0.0) || !(opt.tol_f >= 0.0) || opt.max_iterations < 1) {
    throw ConfigError("nelder_mead: invalid tolerances");
  }
  auto eval = [&](std::vector<double> x) {
    const double v = f(x);
    return Vertex{std::move(x), std::isfinite(v) ? v : HUGE_VAL};
  };

  std::vector<Vertex> s;
  s.reserve(n + 1);
  s.push_back(eval({start.begin(), start.end()}));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(start.begin(), start.end());
    x[i] = x[i] != 0.0 ? 1.05 * x[i] : 0.00025;
    s.push_back(eval(std::move(x)));
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  NelderMeadResult res;
  for (;;) {
    std::stable_sort(s.begin(), s.end(), by_value);
    double spread = 0.0, diameter = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      spread = std::max(spread, std::abs(s[k].f - s[0].f));
      for (std::size_t i = 0; i < n; ++i) diameter = std::max(diameter, std::abs(s[k].x[i] - s[0].x[i]));
    }
    if (spread <= opt.tol_f && diameter <= opt.tol_x) {
      res.converged = true;
      break;
    }
    if (res.iterations >= opt.max_iterations) break;
    ++res.iterations;

    std::vector<double> c(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) c[i] += s[k].x[i];
    }
    for (double& v : c) v /= static_cast<double>(n);

    Vertex& worst = s[n];
    Vertex r = eval(affine(c, worst.x, -1.0));
    if (r.f < s[0].f) {
      Vertex e = eval(affine(c, worst.x, -2.0));
      worst = e.f < r.f ? std::move(e) : std::move(r);
      continue;
    }
    if (r.f < s[n - 1].f) {
      worst = std::move(r);
      continue;
    }
    if (r.f < worst.f) {
      Vertex oc = eval(affine(c, worst.x, -0.5));
      if (oc.f <= r.f) {
        worst = std::move(oc);
        continue;
      }
    } else {
      Vertex ic = eval(affine(c, worst.x, 0.5));
      if (ic.f < worst.f) {
        worst = std::move(ic);
        continue;
      }
    }
    for (std::size_t k = 1; k <= n; ++k) s[k] = eval(affine(s[0].x, s[k].x, 0.5));
  }
  res.argmin = s[0].x;
  res.value = s[0].f;
  return res;
}

}  // namespace sgn

#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

namespace sgn {

struct GmresConfig {
  double tolerance = 1e-12;  // relative residual
  int restart = 40;
  int max_iterations = 400;

  /// Throws ConfigError unless 0 < tolerance < 1, restart >= 1, max_iterations >= 1.
  void validate() const;
};

struct GmresStats {
  int iterations = 0;     // Arnoldi steps over all restart cycles
  double residual = 0.0;  // measured ||rhs - A x|| / ||rhs||
  bool converged = false;
};

/// GMRES ran out of iterations before reaching the tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, GmresStats stats) : std::runtime_error(what), stats_(stats) {}
  const GmresStats& stats() const { return stats_; }

 private:
  GmresStats stats_;
};

/// y = A x for vectors of the problem size.
using LinearMap = std::function<void(std::span<const double> x, std::span<double> y)>;

/// Restarted GMRES(m) for A x = rhs, starting from the contents of `x`.
///
/// Arnoldi uses classical Gram-Schmidt with one reorthogonalization pass. The
/// Givens estimate only decides when to leave a cycle; convergence is judged on
/// the residual recomputed from x. Does not throw on non-convergence; check
/// `converged`.
GmresStats gmres(const LinearMap& a, std::span<const double> rhs, std::span<double> x,
                 const GmresConfig& cfg);

}  // namespace sgn

#pragma once

#include <vector>

#include "sgn/field.hpp"
#include "sgn/gmres.hpp"

namespace sgn {

/// L[sigma] = 3 sigma / h^3 - div(grad sigma / h) for a fixed depth h.
///
/// Applied matrix-free through the FFT; the only stored data is h and the
/// diagonal preconditioner symbol.
class SigmaOperator {
 public:
  /// Throws CavitationError if min(h) <= 0.
  explicit SigmaOperator(RealField2D h);

  const RealField2D& depth() const { return h_; }

  RealField2D apply(const RealField2D& sigma) const;

  /// out = M^{-1} L[in] on raw nodal arrays; the map GMRES iterates with.
  void apply_preconditioned(std::span<const double> in, std::span<double> out) const;

 private:
  RealField2D h_;
};

/// Divides each DFT coefficient by 3 + kx^2 + ky^2, the symbol of L at h = 1.
///
/// kx (ky) is taken as zero on the Nyquist row (column) because first
/// derivatives drop that mode; with that convention the preconditioner is the
/// exact inverse of the discrete operator at h = 1.
RealField2D precondition(const RealField2D& r);

RealField2D apply_sigma_operator(const SigmaOperator& op, const RealField2D& sigma);

struct SigmaSolution {
  RealField2D sigma;
  GmresStats stats;
};

/// Solves L[sigma] = rhs by left-preconditioned GMRES warm-started at `guess`.
/// Throws SolverError if the tolerance is not reached.
SigmaSolution solve_sigma_rhs(const SigmaOperator& op, const RealField2D& rhs, const RealField2D& guess,
                              const GmresConfig& cfg);

/// Solves L[sigma] = -div v for the depth h.
SigmaSolution solve_sigma(const RealField2D& h, const RealField2D& vx, const RealField2D& vy,
                          const RealField2D& guess, const GmresConfig& cfg = {});

}  // namespace sgn

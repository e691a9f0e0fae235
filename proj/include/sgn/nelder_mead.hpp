#pragma once

#include <functional>
#include <span>
#include <vector>

namespace sgn {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  double tol_x = 1e-10;  // simplex diameter, max norm
  double tol_f = 1e-12;  // spread of objective values
  int max_iterations = 20000;
};

struct NelderMeadResult {
  std::vector<double> argmin;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;  // false: iteration cap hit, argmin is the best vertex so far
};

/// Derivative-free simplex minimisation with the fminsearch initial simplex
/// (5% steps, 0.00025 for zero components) and the standard reflection,
/// expansion, contraction and shrink coefficients 1, 2, 1/2, 1/2.
NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start, const NelderMeadOptions& opt = {});

}  // namespace sgn

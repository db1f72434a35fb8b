#pragma once

#include <array>
#include <functional>

namespace qng {

/// Golden-section minimization of a unimodal function on [a, b].
/// Returns the abscissa of the minimum to absolute tolerance x_tol.
double golden_section(const std::function<double(double)>& f, double a,
                      double b, double x_tol = 1e-10);

struct SimplexResult {
  std::array<double, 2> x;
  double f;
  int evaluations;
  bool converged;
};

/// Derivative-free Nelder-Mead refinement in two dimensions.
/// Terminates when the simplex diameter drops below x_tol or the spread
/// of function values below f_tol; gives up (converged = false) once the
/// evaluation budget is exhausted.
SimplexResult nelder_mead_2d(
    const std::function<double(const std::array<double, 2>&)>& f,
    std::array<double, 2> start, double step, double x_tol = 1e-6,
    double f_tol = 1e-10, int budget = 10000);

}  // namespace qng

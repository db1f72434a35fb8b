#pragma once

#include <string>

#include "qng/witness.hpp"

namespace qng {

struct OptimizerConfig {
  int grid_s = 41;        // coarse-grid points in s
  int grid_beta = 41;     // coarse-grid points in beta (searched on [0, beta_max])
  double s_min = -2.0;
  double s_max = 2.0;
  double beta_min = -3.0;
  double beta_max = 3.0;
  double x_tol = 1e-6;    // simplex diameter termination
  double f_tol = 1e-10;   // delta improvement termination
  int budget = 10000;     // witness evaluation budget for the refinement
};

struct OptResult {
  GaussianOp op;
  double delta;
  int evaluations;
  bool converged;
};

enum class Strategy { none, squeeze, disp_squeeze };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct EpsMaxResult {
  double eps_max;
  double alpha;
  double xi;
  Strategy strategy;
  double bracket;  // width of the bisection bracket achieved
};

/// Squeezing that minimizes the photon number of the squeezed evolved
/// odd cat (beta = 0), in closed form:
///   s_opt = -1/4 log[(1 - e^{2a^2} - 4a^2 e^{2a^2}(1-eps)) /
///                    (1 - e^{2a^2} - 4a^2 (1-eps))].
/// Throws std::domain_error if the log argument is not positive.
double s_opt_analytic(double alpha, double epsilon);

/// Optimal odd-cat witness: op = (s_opt_analytic, beta = 0).
OptResult optimize_odd(double alpha, double epsilon);

/// Numeric minimization of the even-cat witness over (beta, s): coarse
/// grid scan followed by Nelder-Mead refinement from the best grid
/// point. Searches beta >= 0 (the witness is even in beta) and reports
/// the non-negative representative.
OptResult optimize_even(double alpha, double epsilon,
                        const OptimizerConfig& cfg = {});

/// Most negative violation_margin over the op family for the given cat
/// family, searched in dip coordinates (evaluation point p = beta e^s,
/// inner 1D minimization over s). Negative iff some op certifies QNG;
/// numerically meaningful even where the absolute delta underflows.
double best_violation_margin(double alpha, double xi, double epsilon,
                             const OptimizerConfig& cfg = {});

/// Largest eps whose optimized witness under the chosen strategy is
/// <= 0: coarse downward scan from 1 - 1e-4 in steps of 1e-2, then
/// bisection of the bracketing interval to width 1e-5. Returns
/// eps_max = 0 if no grid point yields a violation.
EpsMaxResult epsilon_max(double alpha, double xi, Strategy strategy,
                         const OptimizerConfig& cfg = {});

}  // namespace qng

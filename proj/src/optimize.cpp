#include "qng/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qng/minimize.hpp"

namespace qng {

namespace {

// Objective for the even-cat search. At large (beta, s) both the origin
// value and the hull bound underflow and their double-precision
// difference is an exact 0, which the "delta <= 0" tie-break would
// misread as a violation; the true delta out there is positive, so the
// plateau is mapped to a tiny positive value instead.
double guarded_delta(const CatParams& cat, NoiseParam noise,
                     const GaussianOp& op) {
  const WitnessReport r = witness_delta(cat, noise, op);
  if (r.bound == 0.0)
    return std::max(r.w0, std::numeric_limits<double>::denorm_min());
  return r.delta;
}

// Photon number after D(i beta) S(s) expressed in dip coordinates: the
// pulled-back evaluation point is p = beta e^s, so beta^2 = p^2 e^{-2s}.
double nbar_at(const Moments& me, double p, double s) {
  const double mu = std::cosh(s), nu = std::sinh(s);
  return (mu * mu + nu * nu) * me.nbar + 2.0 * mu * nu * me.a2 + nu * nu +
         p * p * std::exp(-2.0 * s);
}

// violation_margin minimized over s at a fixed evaluation point p; the
// margin depends on s only through the photon number.
double margin_at_p(const CatParams& cat, NoiseParam noise, double p) {
  const Moments me = evolved_moments(initial_moments(cat), noise);
  const double s_hi = 0.5 * std::log(2.0 * std::max(p, 1.0)) + 3.0;
  const double s = golden_section(
      [&](double sv) { return nbar_at(me, p, sv); }, -3.0, s_hi, 1e-12);
  return violation_margin(cat, noise, {s, p * std::exp(-s)});
}

bool is_odd_family(double xi) { return std::abs(xi + 1.0) < 1e-12; }
bool is_even_family(double xi) { return std::abs(xi - 1.0) < 1e-12; }

// Squeeze-only optimum (beta = 0): minimize the photon number over s.
double best_squeeze_delta(const CatParams& cat, NoiseParam noise) {
  const Moments me = evolved_moments(initial_moments(cat), noise);
  const double s = golden_section(
      [&](double sv) {
        const double mu = std::cosh(sv), nu = std::sinh(sv);
        return (mu * mu + nu * nu) * me.nbar + 2.0 * mu * nu * me.a2 + nu * nu;
      },
      -3.0, 3.0, 1e-12);
  return witness_delta(cat, noise, {s, 0.0}).delta;
}

}  // namespace

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::none: return "none";
    case Strategy::squeeze: return "squeeze";
    case Strategy::disp_squeeze: return "disp-squeeze";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "none") return Strategy::none;
  if (s == "squeeze") return Strategy::squeeze;
  if (s == "disp-squeeze") return Strategy::disp_squeeze;
  throw std::invalid_argument("unknown strategy: " + s);
}

double s_opt_analytic(double alpha, double epsilon) {
  if (!(alpha > 0.0))
    throw std::invalid_argument("s_opt_analytic requires alpha > 0");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("s_opt_analytic requires eps in [0, 1]");
  const double e2 = std::exp(2.0 * alpha * alpha);
  const double eta = 1.0 - epsilon;
  const double num = 1.0 - e2 - 4.0 * alpha * alpha * e2 * eta;
  const double den = 1.0 - e2 - 4.0 * alpha * alpha * eta;
  const double arg = num / den;
  if (!(arg > 0.0))
    throw std::domain_error("s_opt_analytic: log argument not positive");
  return -0.25 * std::log(arg);
}

OptResult optimize_odd(double alpha, double epsilon) {
  const CatParams cat = CatParams::make(alpha, -1.0);
  const NoiseParam noise(epsilon);
  const GaussianOp op{s_opt_analytic(alpha, epsilon), 0.0};
  const double delta = witness_delta(cat, noise, op).delta;
  const double delta0 = witness_delta(cat, noise, {0.0, 0.0}).delta;
  if (delta > delta0 + 1e-12)
    throw std::runtime_error("optimize_odd: analytic optimum beaten by s = 0");
  return {op, delta, 2, true};
}

OptResult optimize_even(double alpha, double epsilon,
                        const OptimizerConfig& cfg) {
  if (cfg.grid_s < 2 || cfg.grid_beta < 2 || cfg.s_min >= cfg.s_max ||
      cfg.beta_max <= 0.0 || cfg.x_tol <= 0.0 || cfg.f_tol <= 0.0)
    throw std::invalid_argument("optimize_even: invalid optimizer config");
  const CatParams cat = CatParams::make(alpha, 1.0);
  const NoiseParam noise(epsilon);

  int evals = 0;
  auto objective = [&](double beta, double s) {
    ++evals;
    return guarded_delta(cat, noise, {s, std::abs(beta)});
  };

  // Coarse grid; beta >= 0 by the beta -> -beta symmetry of the even cat.
  const double ds = (cfg.s_max - cfg.s_min) / (cfg.grid_s - 1);
  const double db = cfg.beta_max / (cfg.grid_beta - 1);
  double best = std::numeric_limits<double>::infinity();
  double bs = 0.0, bb = 0.0;
  for (int i = 0; i < cfg.grid_s; ++i) {
    const double s = cfg.s_min + i * ds;
    for (int j = 0; j < cfg.grid_beta; ++j) {
      const double b = j * db;
      const double d = objective(b, s);
      if (d < best) {
        best = d;
        bs = s;
        bb = b;
      }
    }
  }

  const SimplexResult r = nelder_mead_2d(
      [&](const std::array<double, 2>& x) { return objective(x[0], x[1]); },
      {bb, bs}, 0.5 * std::max(ds, db), cfg.x_tol, cfg.f_tol,
      cfg.budget - evals);
  if (r.f <= best) {
    best = r.f;
    bb = std::abs(r.x[0]);
    bs = r.x[1];
  }
  return {{bs, bb}, best, evals, r.converged};
}

double best_violation_margin(double alpha, double xi, double epsilon,
                             const OptimizerConfig&) {
  const CatParams cat = CatParams::make(alpha, xi);
  const NoiseParam noise(epsilon);
  const double eta = 1.0 - epsilon;

  // The violating region for high loss sits at the first interference
  // dip p* = pi / (4 sqrt(eta) alpha) of the evolved Wigner function;
  // cover it with margin, capped to keep the photon number sane.
  double pmax = 8.0;
  if (eta > 0.0 && alpha > 1e-9) {
    const double pstar = std::numbers::pi / (4.0 * std::sqrt(eta) * alpha);
    pmax = std::max(pmax, 1.35 * pstar + 4.0);
  }
  pmax = std::min(pmax, 5000.0);

  const int n = 400;
  std::vector<double> m(n);
  for (int i = 0; i < n; ++i)
    m[i] = margin_at_p(cat, noise, pmax * i / (n - 1));

  double best = m[0];
  auto refine = [&](int i) {
    const double lo = pmax * std::max(i - 1, 0) / (n - 1);
    const double hi = pmax * std::min(i + 1, n - 1) / (n - 1);
    const double p = golden_section(
        [&](double pv) { return margin_at_p(cat, noise, pv); }, lo, hi,
        std::max(1e-10, pmax * 1e-9));
    best = std::min({best, m[i], margin_at_p(cat, noise, p)});
  };
  for (int i = 1; i + 1 < n; ++i)
    if (m[i] < m[i - 1] && m[i] <= m[i + 1]) refine(i);
  if (m[n - 1] < m[n - 2]) refine(n - 1);
  return best;
}

EpsMaxResult epsilon_max(double alpha, double xi, Strategy strategy,
                         const OptimizerConfig& cfg) {
  const bool odd = is_odd_family(xi);
  if (!odd && !is_even_family(xi))
    throw std::invalid_argument("epsilon_max: xi must be -1 or +1");

  auto violated = [&](double eps) -> bool {
    const CatParams cat = CatParams::make(alpha, xi);
    const NoiseParam noise(eps);
    switch (strategy) {
      case Strategy::none:
        return witness_delta(cat, noise, {0.0, 0.0}).delta <= 0.0;
      case Strategy::squeeze: {
        if (odd) {
          try {
            const GaussianOp op{s_opt_analytic(alpha, eps), 0.0};
            return witness_delta(cat, noise, op).delta <= 0.0;
          } catch (const std::domain_error&) {
            return best_squeeze_delta(cat, noise) <= 0.0;
          }
        }
        return best_squeeze_delta(cat, noise) <= 0.0;
      }
      case Strategy::disp_squeeze: {
        if (best_violation_margin(alpha, xi, eps, cfg) <= 0.0) return true;
        if (odd) {
          try {
            const GaussianOp op{s_opt_analytic(alpha, eps), 0.0};
            if (witness_delta(cat, noise, op).delta <= 0.0) return true;
          } catch (const std::domain_error&) {
          }
          return false;
        }
        return optimize_even(alpha, eps, cfg).delta <= 0.0;
      }
    }
    return false;
  };

  const double top = 1.0 - 1e-4;
  const double step = 1e-2;
  for (int k = 0; k < 100; ++k) {
    const double eps = top - k * step;
    if (eps < 0.0) break;
    if (!violated(eps)) continue;
    if (k == 0) return {top, alpha, xi, strategy, 1e-4};
    double lo = eps, hi = top - (k - 1) * step;
    while (hi - lo > 1e-5) {
      const double mid = 0.5 * (lo + hi);
      (violated(mid) ? lo : hi) = mid;
    }
    return {lo, alpha, xi, strategy, hi - lo};
  }
  return {0.0, alpha, xi, strategy, 0.0};
}

}  // namespace qng

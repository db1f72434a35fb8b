#include "qng/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qng {

namespace {
constexpr double kPi = std::numbers::pi;
}

double GaussianOp::mu() const { return std::cosh(s); }
double GaussianOp::nu() const { return std::sinh(s); }

double hull_bound(double nbar) {
  if (nbar < 0.0) throw std::invalid_argument("hull_bound: nbar must be >= 0");
  return 2.0 / kPi * std::exp(-2.0 * nbar * (nbar + 1.0));
}

double op_photon_number(const Moments& m, const GaussianOp& op) {
  const double mu = op.mu(), nu = op.nu();
  return (mu * mu + nu * nu) * m.nbar + 2.0 * mu * nu * m.a2 + nu * nu +
         op.beta * op.beta;
}

double op_wigner_origin(const CatParams& cat, NoiseParam noise,
                        const GaussianOp& op) {
  // Origin pulled back through D(i beta) then S(s): the squeeze scales the
  // p coordinate by e^s, the displacement shifts it by -beta.
  const PhasePoint pulled{0.0, -op.beta * std::exp(op.s)};
  return lossy_cat_wigner(cat, noise, pulled);
}

WitnessReport witness_delta(const CatParams& cat, NoiseParam noise,
                            const GaussianOp& op) {
  const double w0 = op_wigner_origin(cat, noise, op);
  const double nbar =
      op_photon_number(evolved_moments(initial_moments(cat), noise), op);
  const double bound = hull_bound(nbar);
  return {w0,        nbar,   bound,        w0 - bound,
          op,        cat.alpha, cat.xi,    noise.epsilon};
}

double violation_margin(const CatParams& cat, NoiseParam noise,
                        const GaussianOp& op) {
  const double a = cat.alpha, xi = cat.xi, eps = noise.epsilon;
  const double eta = noise.eta();
  const double p = -op.beta * std::exp(op.s);
  const double nbar =
      op_photon_number(evolved_moments(initial_moments(cat), noise), op);
  // w0 = 2/(pi N^2) e^{-2 p^2} g(p) with the bracket g below.
  const double g = (1.0 + xi * xi) * std::exp(-2.0 * eta * a * a) +
                   2.0 * xi * std::exp(-2.0 * eps * a * a) *
                       std::cos(4.0 * std::sqrt(eta) * a * p);
  if (g <= 0.0) return -1.0;  // w0 <= 0 < bound: certain violation
  const double log_w0 = std::log(2.0 / (kPi * cat.norm2())) - 2.0 * p * p +
                        std::log(g);
  const double log_bound = std::log(2.0 / kPi) - 2.0 * nbar * (nbar + 1.0);
  return std::tanh(0.5 * (log_w0 - log_bound));
}

}  // namespace qng

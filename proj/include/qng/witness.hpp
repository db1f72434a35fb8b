#pragma once

#include "qng/phase_space.hpp"

namespace qng {

/// Auxiliary Gaussian operation D(i*beta) S(s) with real squeezing s and
/// an imaginary-axis displacement of magnitude beta. The squeezing
/// convention is fixed by the Heisenberg transform a -> mu a + nu a^dag
/// with mu = cosh s, nu = sinh s.
struct GaussianOp {
  double s = 0.0;
  double beta = 0.0;

  double mu() const;
  double nu() const;
};

/// One witness evaluation: origin Wigner value after the op, photon
/// number after the op, the Gaussian-hull bound, and delta = w0 - bound.
/// delta < 0 certifies quantum non-Gaussianity.
struct WitnessReport {
  double w0;
  double nbar_op;
  double bound;
  double delta;
  GaussianOp op;
  double alpha;
  double xi;
  double epsilon;
};

/// Hull bound (2/pi) exp(-2 nbar (nbar + 1)); every convex mixture of
/// pure Gaussian states with mean photon number nbar has an origin
/// Wigner value at least this large. Rejects negative nbar.
double hull_bound(double nbar);

/// Mean photon number of D(i beta) S(s) rho S^dag D^dag for a state with
/// the given (real) moments:
///   (mu^2 + nu^2) nbar + 2 mu nu <a^2> + nu^2 + beta^2.
double op_photon_number(const Moments& m, const GaussianOp& op);

/// Origin Wigner value of the transformed evolved state, computed by
/// pulling the origin back through the op's affine phase-space action:
/// W[D S rho S^dag D^dag](0) = W[rho](-i beta e^s). For beta = 0 this is
/// the origin value for every s (squeezing fixes the origin).
double op_wigner_origin(const CatParams& cat, NoiseParam noise,
                        const GaussianOp& op);

/// Full witness evaluation for one (alpha, xi, epsilon, op) tuple.
WitnessReport witness_delta(const CatParams& cat, NoiseParam noise,
                            const GaussianOp& op);

/// Sign-preserving normalized witness margin in (-1, 1):
///   (w0 - bound) / (|w0| + bound)
/// evaluated in log space, so the sign survives even where w0 and the
/// bound both underflow to zero in double precision (this happens at the
/// far interference dips that decide eps_max for small-amplitude even
/// cats). Agrees in sign with witness_delta().delta everywhere.
double violation_margin(const CatParams& cat, NoiseParam noise,
                        const GaussianOp& op);

}  // namespace qng

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qng/phase_space.hpp"
#include "qng/witness.hpp"

namespace qng::fock {

/// Truncated density matrix with its cutoff and a tail-mass diagnostic
/// (probability weight lost to truncation, relative to the untruncated
/// norm where that is known).
struct FockState {
  Eigen::MatrixXcd rho;  // (n_cut + 1) x (n_cut + 1), Hermitian
  int n_cut;
  double tail_mass;
};

/// Extra levels kept above the working cutoff so truncated generator
/// exponentials stay unitary on the block that matters.
inline constexpr int kGuardBand = 15;

/// Cutoff rule: n_cut = max(30, ceil(m + 8 sqrt(m) + 20)) for a
/// post-operation photon-number estimate m. Callers add kGuardBand when
/// building unitaries.
int cutoff_for(double nbar_estimate);

/// Pure cat-state density matrix from the Fock amplitudes
/// c_n = e^{-a^2/2} ((-a)^n + xi a^n) / (N sqrt(n!)).
/// Throws std::runtime_error if the truncated tail mass exceeds 1e-10.
FockState cat_fock(const CatParams& cat, int n_cut);

/// Thermal state with mean photon number nbar (oracle-side soundness
/// probe; thermal states are in the Gaussian hull).
FockState thermal_fock(double nbar, int n_cut);

/// Amplitude-damping channel at loss eps via the standard Kraus family
/// K_k = sum_n sqrt(C(n,k) (1-eps)^{n-k} eps^k) |n-k><n|.
FockState apply_loss(const FockState& state, double epsilon);

/// Squeeze operator exp{(s/2)(ad^2 - a^2)} on the truncated space.
Eigen::MatrixXcd squeeze_matrix(double s, int dim);

/// Displacement exp{g ad - g* a} on the truncated space.
Eigen::MatrixXcd displace_matrix(std::complex<double> gamma, int dim);

/// D(i beta) S(s) as an explicit matrix. Throws std::runtime_error if
/// U^dag U deviates from the identity by more than 1e-9 on the lower
/// (dim - kGuardBand) block.
Eigen::MatrixXcd gaussian_op_matrix(const GaussianOp& op, int dim);

/// U rho U^dag, re-hermitized, renormalized per the tail policy.
FockState apply_unitary(const FockState& state, const Eigen::MatrixXcd& u);

/// Origin Wigner value via the parity sum (2/pi) sum_n (-1)^n rho_nn.
double parity_w0(const FockState& state);

/// W(lambda) via displaced parity: displace by -lambda, then parity_w0.
/// Throws if the displaced state leaks into the top guard levels.
double wigner_at(const FockState& state, PhasePoint lam);

double expectation_nbar(const FockState& state);
double expectation_a2(const FockState& state);
double purity(const FockState& state);

}  // namespace qng::fock

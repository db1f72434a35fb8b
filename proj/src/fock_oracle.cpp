#include "qng/fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qng::fock {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRenormTail = 1e-10;

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

MatrixXcd lowering(int dim) {
  MatrixXcd a = MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

// exp(G) for anti-Hermitian G, via the eigendecomposition of iG.
MatrixXcd exp_antihermitian(const MatrixXcd& g) {
  const MatrixXcd h = complex<double>(0.0, -1.0) * g;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
  const auto& d = es.eigenvalues();
  VectorXcd phases(d.size());
  for (int i = 0; i < d.size(); ++i)
    phases(i) = std::polar(1.0, d(i));
  return es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint();
}

FockState finalize(MatrixXcd rho, int n_cut, double tail) {
  rho = 0.5 * (rho + rho.adjoint().eval());
  const double tr = rho.real().trace();
  if (std::abs(1.0 - tr) > kRenormTail || tail > kRenormTail)
    throw std::runtime_error(
        "fock oracle: cutoff too small (trace deficit " +
        std::to_string(1.0 - tr) + ", tail " + std::to_string(tail) + ")");
  rho /= tr;
  return {std::move(rho), n_cut, tail};
}

}  // namespace

int cutoff_for(double nbar_estimate) {
  const double m = std::max(nbar_estimate, 0.0);
  return std::max(30, static_cast<int>(std::ceil(m + 8.0 * std::sqrt(m) + 20.0)));
}

FockState cat_fock(const CatParams& cat, int n_cut) {
  const int dim = n_cut + 1;
  const double a = cat.alpha, xi = cat.xi;
  VectorXcd c(dim);
  double log_fact = 0.0;
  double mass = 0.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) log_fact += std::log(double(n));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double amp = std::exp(-0.5 * a * a - 0.5 * log_fact) *
                       std::pow(a, n) * (sign + xi) / cat.norm;
    c(n) = amp;
    mass += amp * amp;
  }
  const double tail = std::abs(1.0 - mass);
  return finalize(c * c.adjoint(), n_cut, tail);
}

FockState thermal_fock(double nbar, int n_cut) {
  if (nbar < 0.0) throw std::invalid_argument("thermal_fock: nbar < 0");
  const int dim = n_cut + 1;
  MatrixXcd rho = MatrixXcd::Zero(dim, dim);
  double mass = 0.0;
  for (int n = 0; n < dim; ++n) {
    const double p =
        nbar == 0.0 ? (n == 0 ? 1.0 : 0.0)
                    : std::exp(n * std::log(nbar / (1.0 + nbar)) -
                               std::log(1.0 + nbar));
    rho(n, n) = p;
    mass += p;
  }
  return finalize(std::move(rho), n_cut, std::abs(1.0 - mass));
}

FockState apply_loss(const FockState& state, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("apply_loss: eps must lie in [0, 1]");
  const int dim = state.n_cut + 1;
  if (epsilon == 0.0) return state;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  // log-binomial amplitudes; for eps = 1 only k = n survives.
  std::vector<double> log_fact(dim, 0.0);
  for (int n = 1; n < dim; ++n) log_fact[n] = log_fact[n - 1] + std::log(double(n));
  for (int k = 0; k < dim; ++k) {
    MatrixXcd kraus = MatrixXcd::Zero(dim, dim);
    for (int n = k; n < dim; ++n) {
      double log_amp = 0.5 * (log_fact[n] - log_fact[k] - log_fact[n - k]) +
                       0.5 * k * std::log(epsilon);
      if (n > k) {
        if (epsilon == 1.0) continue;
        log_amp += 0.5 * (n - k) * std::log1p(-epsilon);
      }
      kraus(n - k, n) = std::exp(log_amp);
    }
    out += kraus * state.rho * kraus.adjoint();
  }
  return finalize(std::move(out), state.n_cut, state.tail_mass);
}

MatrixXcd squeeze_matrix(double s, int dim) {
  const MatrixXcd a = lowering(dim);
  const MatrixXcd ad = a.adjoint();
  return exp_antihermitian(0.5 * s * (ad * ad - a * a));
}

MatrixXcd displace_matrix(complex<double> gamma, int dim) {
  const MatrixXcd a = lowering(dim);
  return exp_antihermitian(gamma * a.adjoint() - std::conj(gamma) * a);
}

Eigen::MatrixXcd gaussian_op_matrix(const GaussianOp& op, int dim) {
  const MatrixXcd u = displace_matrix(complex<double>(0.0, op.beta), dim) *
                      squeeze_matrix(op.s, dim);
  const int block = std::max(1, dim - kGuardBand);
  const MatrixXcd dev = (u.adjoint() * u).topLeftCorner(block, block) -
                        MatrixXcd::Identity(block, block);
  if (dev.cwiseAbs().maxCoeff() > 1e-9)
    throw std::runtime_error(
        "gaussian_op_matrix: unitarity lost on the working block; "
        "increase the cutoff guard band");
  return u;
}

FockState apply_unitary(const FockState& state, const MatrixXcd& u) {
  return finalize(u * state.rho * u.adjoint(), state.n_cut, state.tail_mass);
}

double parity_w0(const FockState& state) {
  double sum = 0.0;
  for (int n = 0; n <= state.n_cut; ++n)
    sum += (n % 2 == 0 ? 1.0 : -1.0) * state.rho(n, n).real();
  return 2.0 / kPi * sum;
}

double wigner_at(const FockState& state, PhasePoint lam) {
  const int dim = state.n_cut + 1;
  const MatrixXcd d = displace_matrix(complex<double>(-lam.re, -lam.im), dim);
  const MatrixXcd shifted = d * state.rho * d.adjoint();
  // leakage into the guard band means the displaced state no longer fits
  const int lo = std::max(0, dim - kGuardBand);
  double guard_mass = 0.0;
  for (int n = lo; n < dim; ++n) guard_mass += shifted(n, n).real();
  if (guard_mass > 1e-9)
    throw std::runtime_error("wigner_at: displaced state exceeds cutoff");
  double sum = 0.0;
  for (int n = 0; n < dim; ++n)
    sum += (n % 2 == 0 ? 1.0 : -1.0) * shifted(n, n).real();
  return 2.0 / kPi * sum;
}

double expectation_nbar(const FockState& state) {
  double sum = 0.0;
  for (int n = 0; n <= state.n_cut; ++n) sum += n * state.rho(n, n).real();
  return sum;
}

double expectation_a2(const FockState& state) {
  const int dim = state.n_cut + 1;
  const MatrixXcd a = lowering(dim);
  return (state.rho * a * a).trace().real();
}

double purity(const FockState& state) {
  return (state.rho * state.rho).trace().real();
}

}  // namespace qng::fock

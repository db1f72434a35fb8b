#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qng/fock_oracle.hpp"
#include "qng/phase_space.hpp"
#include "qng/witness.hpp"

using namespace qng;
namespace f = qng::fock;

namespace {
constexpr double kPi = std::numbers::pi;

f::FockState make_cat(double alpha, double xi) {
  const CatParams cat = CatParams::make(alpha, xi);
  const int n_cut = f::cutoff_for(initial_moments(cat).nbar) + f::kGuardBand;
  return f::cat_fock(cat, n_cut);
}
}  // namespace

TEST_CASE("cat state construction") {
  const f::FockState st = make_cat(1.0, -1.0);
  CHECK(st.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f::purity(st) == doctest::Approx(1.0).epsilon(1e-10));
  // odd cat occupies odd levels only
  for (int n = 0; n <= st.n_cut; n += 2)
    CHECK(std::abs(st.rho(n, n)) < 1e-14);
  CHECK(f::expectation_nbar(st) ==
        doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-10));
  CHECK(f::expectation_a2(st) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(f::parity_w0(st) == doctest::Approx(-2.0 / kPi).epsilon(1e-12));
}

TEST_CASE("thermal state and loss endpoints") {
  const f::FockState th = f::thermal_fock(0.6, 80);
  CHECK(f::expectation_nbar(th) == doctest::Approx(0.6).epsilon(1e-10));
  CHECK(f::parity_w0(th) ==
        doctest::Approx(2.0 / (kPi * (1.0 + 2.0 * 0.6))).epsilon(1e-10));

  const f::FockState cat = make_cat(1.2, 1.0);
  // eps = 0 leaves the state alone, eps = 1 gives the vacuum
  CHECK((f::apply_loss(cat, 0.0).rho - cat.rho).cwiseAbs().maxCoeff() < 1e-14);
  const f::FockState vac = f::apply_loss(cat, 1.0);
  CHECK(std::abs(vac.rho(0, 0) - 1.0) < 1e-12);
  CHECK(f::expectation_nbar(vac) < 1e-12);
}

TEST_CASE("loss channel matches the analytic moment scaling") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> ua(0.3, 1.6), ue(0.0, 1.0),
      uxi(-1.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const double a = ua(rng), xi = uxi(rng), e = ue(rng);
    const CatParams cat = CatParams::make(a, xi);
    const Moments me = evolved_moments(initial_moments(cat), NoiseParam(e));
    const f::FockState st = f::apply_loss(make_cat(a, xi), e);
    CHECK(f::expectation_nbar(st) == doctest::Approx(me.nbar).epsilon(1e-9));
    CHECK(f::expectation_a2(st) ==
          doctest::Approx(me.a2).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("displaced parity agrees with the closed-form Wigner function") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> ua(0.2, 1.8), ue(0.0, 1.0),
      ux(-1.2, 1.2), uxi(-1.0, 1.0);
  for (int k = 0; k < 12; ++k) {
    const double a = ua(rng), xi = uxi(rng), e = ue(rng);
    const CatParams cat = CatParams::make(a, xi);
    const NoiseParam noise(e);
    const f::FockState st = f::apply_loss(make_cat(a, xi), e);
    const PhasePoint lam{ux(rng), ux(rng)};
    CHECK(f::wigner_at(st, lam) ==
          doctest::Approx(lossy_cat_wigner(cat, noise, lam))
              .scale(1.0)
              .epsilon(1e-7));
  }
}

TEST_CASE("Gaussian op matrix reproduces the affine pullback") {
  const CatParams cat = CatParams::make(0.6, 1.0);
  const NoiseParam noise(0.6);
  const GaussianOp op{-0.4, 0.5};
  const int n_cut = 90;
  const f::FockState st = f::apply_loss(f::cat_fock(cat, n_cut), 0.6);
  const f::FockState tr =
      f::apply_unitary(st, f::gaussian_op_matrix(op, n_cut + 1));
  CHECK(f::parity_w0(tr) ==
        doctest::Approx(op_wigner_origin(cat, noise, op)).epsilon(1e-9));
  const Moments me = evolved_moments(initial_moments(cat), noise);
  CHECK(f::expectation_nbar(tr) ==
        doctest::Approx(op_photon_number(me, op)).epsilon(1e-9));
}

TEST_CASE("squeeze and displace matrices are consistent") {
  const int dim = 80;
  const Eigen::MatrixXcd s = f::squeeze_matrix(0.5, dim);
  const Eigen::MatrixXcd sinv = f::squeeze_matrix(-0.5, dim);
  const int block = dim - f::kGuardBand;
  CHECK(((s * sinv).topLeftCorner(block, block) -
         Eigen::MatrixXcd::Identity(block, block))
            .cwiseAbs()
            .maxCoeff() < 1e-9);
  // displacing the vacuum gives a coherent state: Poisson photon numbers
  f::FockState vac = f::thermal_fock(0.0, dim - 1);
  const f::FockState coh =
      f::apply_unitary(vac, f::displace_matrix({0.9, 0.0}, dim));
  CHECK(f::expectation_nbar(coh) == doctest::Approx(0.81).epsilon(1e-10));
  CHECK(std::abs(coh.rho(0, 0).real() - std::exp(-0.81)) < 1e-10);
}

TEST_CASE("cutoff policy failures are loud") {
  const CatParams cat = CatParams::make(2.0, 1.0);
  CHECK_THROWS_AS(f::cat_fock(cat, 6), std::runtime_error);
  const f::FockState st = make_cat(0.8, 1.0);
  CHECK_THROWS_AS(f::wigner_at(st, {7.0, 0.0}), std::runtime_error);
}

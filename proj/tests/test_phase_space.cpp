#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qng/phase_space.hpp"

using namespace qng;

namespace {
constexpr double kPi = std::numbers::pi;

// Trapezoid-free normalization check: Gauss-Legendre would be overkill
// here, a fine midpoint grid over the known support reaches 1e-7.
double wigner_mass(const CatParams& cat, NoiseParam noise) {
  const double L = cat.alpha + 6.0;
  const int n = 600;
  const double h = 2.0 * L / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = -L + (i + 0.5) * h;
    for (int j = 0; j < n; ++j) {
      const double p = -L + (j + 0.5) * h;
      sum += lossy_cat_wigner(cat, noise, {x, p});
    }
  }
  return sum * h * h;
}
}  // namespace

TEST_CASE("construction validates its domain") {
  CHECK_THROWS_AS(CatParams::make(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(NoiseParam(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(NoiseParam(1.1), std::invalid_argument);
  CHECK_NOTHROW(CatParams::make(0.0, 1.0));
  CHECK_NOTHROW(NoiseParam(0.0));
  CHECK_NOTHROW(NoiseParam(1.0));
  const CatParams odd = CatParams::make(1.0, -1.0);
  CHECK(odd.norm2() == doctest::Approx(2.0 - 2.0 * std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("pure-cat Wigner frozen values and parity") {
  const CatParams even = CatParams::make(1.0, 1.0);
  CHECK(cat_wigner(even, {0.3, 0.2}) ==
        doctest::Approx(0.40717031630321415).epsilon(1e-13));
  // definite-parity extrema at the origin
  for (double a : {0.2, 0.7, 1.3, 2.0}) {
    CHECK(cat_wigner(CatParams::make(a, -1.0), {0, 0}) ==
          doctest::Approx(-2.0 / kPi).epsilon(1e-14));
    CHECK(cat_wigner(CatParams::make(a, 1.0), {0, 0}) ==
          doctest::Approx(2.0 / kPi).epsilon(1e-14));
  }
  // xi = 0 reduces to a coherent-state Gaussian
  const CatParams coh = CatParams::make(0.8, 0.0);
  CHECK(cat_wigner(coh, {-0.8, 0.0}) ==
        doctest::Approx(2.0 / kPi).epsilon(1e-14));
}

TEST_CASE("lossy Wigner frozen values and limits") {
  CHECK(lossy_cat_wigner(CatParams::make(1.0, -1.0), NoiseParam(0.7), {0, 0}) ==
        doctest::Approx(0.22250917848480364).epsilon(1e-13));
  CHECK(lossy_cat_wigner(CatParams::make(1.5, 1.0), NoiseParam(0.3),
                         {0.0, 0.5}) ==
        doctest::Approx(-0.06353629183712442).epsilon(1e-13));
  // eps = 0 is the identity channel
  const CatParams cat = CatParams::make(1.2, -1.0);
  for (const PhasePoint lam : {PhasePoint{0.1, -0.4}, PhasePoint{1.0, 0.7}})
    CHECK(lossy_cat_wigner(cat, NoiseParam(0.0), lam) ==
          doctest::Approx(cat_wigner(cat, lam)).epsilon(1e-15));
  // eps = 1 is the vacuum for every input
  for (double xi : {-1.0, 0.0, 1.0}) {
    const CatParams c = CatParams::make(1.3, xi);
    CHECK(lossy_cat_wigner(c, NoiseParam(1.0), {0.2, -0.1}) ==
          doctest::Approx(2.0 / kPi * std::exp(-2.0 * 0.05)).epsilon(1e-13));
  }
}

TEST_CASE("quadrature convolution reproduces the closed form") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ua(0.2, 1.8), ue(0.05, 1.0),
      ux(-1.5, 1.5), uxi(-1.0, 1.0);
  for (int k = 0; k < 12; ++k) {
    const CatParams cat = CatParams::make(ua(rng), uxi(rng));
    const NoiseParam noise(ue(rng));
    const PhasePoint lam{ux(rng), ux(rng)};
    CHECK(convolve_wigner_quadrature(cat, noise, lam) ==
          doctest::Approx(lossy_cat_wigner(cat, noise, lam)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(convolve_wigner_quadrature(CatParams::make(1.0, -1.0),
                                             NoiseParam(0.0), {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("loss channel is a semigroup at the Wigner level") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ua(0.3, 1.5), ue(0.1, 0.9),
      ux(-1.0, 1.0), uxi(-1.0, 1.0);
  for (int k = 0; k < 8; ++k) {
    const CatParams cat = CatParams::make(ua(rng), uxi(rng));
    const double e1 = ue(rng), e2 = ue(rng);
    const double e12 = 1.0 - (1.0 - e1) * (1.0 - e2);
    const PhasePoint lam{ux(rng), ux(rng)};
    const auto w1 = [&](PhasePoint l) {
      return lossy_cat_wigner(cat, NoiseParam(e1), l);
    };
    const double composed = convolve_wigner_quadrature(
        w1, cat.alpha + 6.0, NoiseParam(e2), lam);
    CHECK(composed ==
          doctest::Approx(lossy_cat_wigner(cat, NoiseParam(e12), lam))
              .epsilon(1e-8));
  }
}

TEST_CASE("lossy Wigner stays normalized") {
  for (double a : {0.5, 1.2}) {
    for (double xi : {-1.0, 1.0}) {
      const CatParams cat = CatParams::make(a, xi);
      for (double e : {0.0, 0.4, 0.9})
        CHECK(wigner_mass(cat, NoiseParam(e)) ==
              doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("moments: closed forms and loss scaling") {
  const CatParams odd = CatParams::make(1.0, -1.0);
  const Moments m0 = initial_moments(odd);
  CHECK(m0.nbar == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-14));
  CHECK(m0.a2 == doctest::Approx(1.0).epsilon(1e-15));
  const CatParams even = CatParams::make(1.0, 1.0);
  CHECK(initial_moments(even).nbar ==
        doctest::Approx(std::tanh(1.0)).epsilon(1e-14));
  const Moments me = evolved_moments(m0, NoiseParam(0.3));
  CHECK(me.nbar == doctest::Approx(0.7 * m0.nbar).epsilon(1e-15));
  CHECK(me.a2 == doctest::Approx(0.7 * m0.a2).epsilon(1e-15));
}

#pragma once

#include <functional>

namespace qng {

/// Point lambda = re + i*im in single-mode phase space.
struct PhasePoint {
  double re = 0.0;
  double im = 0.0;
};

/// Parameters of a cat state (|-alpha> + xi*|alpha>)/N with
/// N^2 = 1 + xi^2 + 2*xi*exp(-2*alpha^2).
///
/// xi = -1 gives the odd cat, xi = +1 the even cat, xi = 0 a plain
/// coherent state. Construction rejects N^2 < 1e-12 (the degenerate
/// odd-cat alpha -> 0 limit).
struct CatParams {
  double alpha;
  double xi;
  double norm;  // N, positive

  static CatParams make(double alpha, double xi);

  double norm2() const { return norm * norm; }

 private:
  CatParams(double a, double x, double n) : alpha(a), xi(x), norm(n) {}
};

/// Loss parameter epsilon = 1 - exp(-gamma*t) of the zero-temperature
/// damping channel. gamma and t never appear separately.
struct NoiseParam {
  double epsilon;

  explicit NoiseParam(double eps);

  double eta() const { return 1.0 - epsilon; }
};

/// Mean photon number and <a^2> (real for real-alpha cats).
struct Moments {
  double nbar;
  double a2;
};

/// Wigner function of the pure cat state at lambda, normalized so pure
/// state extrema are +-2/pi. Closed form: two displaced Gaussians plus
/// an oscillatory interference term,
///   W = 2/(pi N^2) [ e^{-2|l+a|^2} + xi^2 e^{-2|l-a|^2}
///                    + 2 xi e^{-2|l|^2} cos(4 a Im l) ].
double cat_wigner(const CatParams& cat, PhasePoint lam);

/// Wigner function of the cat after loss epsilon. Closed form obtained
/// by carrying the four coherent dyads through the damping channel:
///   W = 2/(pi N^2) [ e^{-2|l + r a|^2} + xi^2 e^{-2|l - r a|^2}
///                    + 2 xi e^{-2 eps a^2} e^{-2|l|^2} cos(4 r a Im l) ],
/// r = sqrt(1-eps). Continuous in eps on [0,1]; eps=0 is the identity
/// channel and eps=1 yields the vacuum.
double lossy_cat_wigner(const CatParams& cat, NoiseParam noise, PhasePoint lam);

struct QuadratureConfig {
  double pad = 6.0;      // integration half-width = alpha + pad
  int nodes = 0;         // Gauss-Legendre order per axis; 0 = automatic
  double target = 1e-10; // refinement agreement target
};

/// Literal numerical evaluation of the loss-channel convolution
///   W_eps(l) = 2/(pi eps) Int d^2l' W0(l') exp(-2|l - l' sqrt(1-eps)|^2 / eps)
/// by tensor-product Gauss-Legendre quadrature with a two-resolution
/// agreement check. Requires eps in (0, 1]. Throws std::runtime_error
/// if successive refinements disagree by more than cfg.target.
double convolve_wigner_quadrature(const CatParams& cat, NoiseParam noise,
                                  PhasePoint lam,
                                  const QuadratureConfig& cfg = {});

/// Same quadrature applied to an arbitrary initial Wigner function;
/// used for the channel-composition cross checks.
double convolve_wigner_quadrature(
    const std::function<double(PhasePoint)>& w0, double support_half_width,
    NoiseParam noise, PhasePoint lam, const QuadratureConfig& cfg = {});

/// nbar = alpha^2 (1 + xi^2 - 2 xi e^{-2 alpha^2}) / N^2,  <a^2> = alpha^2.
Moments initial_moments(const CatParams& cat);

/// Both moments scale by (1 - eps) under the loss channel.
Moments evolved_moments(const Moments& m0, NoiseParam noise);

}  // namespace qng

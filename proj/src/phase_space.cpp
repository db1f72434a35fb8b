#include "qng/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace qng {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p0 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

double quad_pass(const std::function<double(PhasePoint)>& w0, double L,
                 double eps, PhasePoint lam, int n) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  const double r = std::sqrt(1.0 - eps);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xi = L * x[i];
    const double dx = lam.re - r * xi;
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      const double yj = L * x[j];
      const double dy = lam.im - r * yj;
      row += w[j] * w0({xi, yj}) * std::exp(-2.0 * (dx * dx + dy * dy) / eps);
    }
    sum += w[i] * row;
  }
  return sum * L * L * 2.0 / (kPi * eps);
}

}  // namespace

CatParams CatParams::make(double alpha, double xi) {
  if (!std::isfinite(alpha) || !std::isfinite(xi))
    throw std::invalid_argument("cat parameters must be finite");
  const double n2 = 1.0 + xi * xi + 2.0 * xi * std::exp(-2.0 * alpha * alpha);
  if (n2 < 1e-12)
    throw std::invalid_argument("cat state normalization degenerate (N^2 = " +
                                std::to_string(n2) + ")");
  return CatParams(alpha, xi, std::sqrt(n2));
}

NoiseParam::NoiseParam(double eps) : epsilon(eps) {
  if (!(eps >= 0.0 && eps <= 1.0))
    throw std::invalid_argument("loss parameter must lie in [0, 1]");
}

double cat_wigner(const CatParams& cat, PhasePoint lam) {
  const double a = cat.alpha, xi = cat.xi;
  const double x = lam.re, p = lam.im;
  const double g1 = std::exp(-2.0 * ((x + a) * (x + a) + p * p));
  const double g2 = xi * xi * std::exp(-2.0 * ((x - a) * (x - a) + p * p));
  const double osc = 2.0 * xi * std::exp(-2.0 * (x * x + p * p)) *
                     std::cos(4.0 * a * p);
  return 2.0 / (kPi * cat.norm2()) * (g1 + g2 + osc);
}

double lossy_cat_wigner(const CatParams& cat, NoiseParam noise,
                        PhasePoint lam) {
  const double a = cat.alpha, xi = cat.xi, eps = noise.epsilon;
  const double r = std::sqrt(1.0 - eps);
  const double x = lam.re, p = lam.im;
  const double g1 = std::exp(-2.0 * ((x + r * a) * (x + r * a) + p * p));
  const double g2 = xi * xi * std::exp(-2.0 * ((x - r * a) * (x - r * a) + p * p));
  const double osc = 2.0 * xi * std::exp(-2.0 * eps * a * a) *
                     std::exp(-2.0 * (x * x + p * p)) * std::cos(4.0 * r * a * p);
  return 2.0 / (kPi * cat.norm2()) * (g1 + g2 + osc);
}

double convolve_wigner_quadrature(
    const std::function<double(PhasePoint)>& w0, double support_half_width,
    NoiseParam noise, PhasePoint lam, const QuadratureConfig& cfg) {
  const double eps = noise.epsilon;
  if (!(eps > 0.0))
    throw std::invalid_argument("quadrature requires eps in (0, 1]");
  const double L = support_half_width;
  // Resolution must cover both the interference oscillation of w0 and the
  // kernel width sqrt(eps)/2 (as a function of l', scaled by sqrt(1-eps)).
  int n = cfg.nodes;
  if (n <= 0) {
    const double k = 4.0 * L + 10.0 / std::sqrt(eps);
    n = std::max(96, static_cast<int>(std::ceil(0.75 * L * k / 2.0)) + 32);
  }
  double coarse = quad_pass(w0, L, eps, lam, n);
  for (int pass = 0; pass < 3; ++pass) {
    const int n2 = static_cast<int>(std::ceil(1.4 * n));
    const double fine = quad_pass(w0, L, eps, lam, n2);
    if (std::abs(fine - coarse) <= cfg.target) return fine;
    coarse = fine;
    n = n2;
  }
  throw std::runtime_error("wigner quadrature did not converge to target");
}

double convolve_wigner_quadrature(const CatParams& cat, NoiseParam noise,
                                  PhasePoint lam, const QuadratureConfig& cfg) {
  auto w0 = [&cat](PhasePoint l) { return cat_wigner(cat, l); };
  return convolve_wigner_quadrature(w0, cat.alpha + cfg.pad, noise, lam, cfg);
}

Moments initial_moments(const CatParams& cat) {
  const double a = cat.alpha, xi = cat.xi;
  const double nbar = a * a * (1.0 + xi * xi - 2.0 * xi * std::exp(-2.0 * a * a)) /
                      cat.norm2();
  return {nbar, a * a};
}

Moments evolved_moments(const Moments& m0, NoiseParam noise) {
  const double eta = noise.eta();
  return {eta * m0.nbar, eta * m0.a2};
}

}  // namespace qng

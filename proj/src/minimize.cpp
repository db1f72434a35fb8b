#include "qng/minimize.hpp"

#include <algorithm>
#include <cmath>

namespace qng {

double golden_section(const std::function<double(double)>& f, double a,
                      double b, double x_tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > x_tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

SimplexResult nelder_mead_2d(
    const std::function<double(const std::array<double, 2>&)>& f,
    std::array<double, 2> start, double step, double x_tol, double f_tol,
    int budget) {
  using Vec = std::array<double, 2>;
  struct Vertex {
    Vec x;
    double f;
  };
  int evals = 0;
  auto eval = [&](const Vec& x) {
    ++evals;
    return f(x);
  };

  std::array<Vertex, 3> v;
  v[0] = {start, eval(start)};
  v[1] = {{start[0] + step, start[1]}, 0.0};
  v[1].f = eval(v[1].x);
  v[2] = {{start[0], start[1] + step}, 0.0};
  v[2].f = eval(v[2].x);

  auto order = [&] {
    std::sort(v.begin(), v.end(),
              [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  order();

  while (evals < budget) {
    const double diam = std::max(
        std::hypot(v[1].x[0] - v[0].x[0], v[1].x[1] - v[0].x[1]),
        std::hypot(v[2].x[0] - v[0].x[0], v[2].x[1] - v[0].x[1]));
    if (diam < x_tol || std::abs(v[2].f - v[0].f) < f_tol)
      return {v[0].x, v[0].f, evals, true};

    const Vec c{0.5 * (v[0].x[0] + v[1].x[0]), 0.5 * (v[0].x[1] + v[1].x[1])};
    auto along = [&](double t) -> Vec {
      return {c[0] + t * (c[0] - v[2].x[0]), c[1] + t * (c[1] - v[2].x[1])};
    };

    const Vec xr = along(1.0);
    const double fr = eval(xr);
    if (fr < v[0].f) {
      const Vec xe = along(2.0);
      const double fe = eval(xe);
      v[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < v[1].f) {
      v[2] = {xr, fr};
    } else {
      const Vec xc = fr < v[2].f ? along(0.5) : along(-0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, v[2].f)) {
        v[2] = {xc, fc};
      } else {
        // shrink toward the best vertex
        for (int i = 1; i < 3; ++i) {
          v[i].x = {0.5 * (v[i].x[0] + v[0].x[0]),
                    0.5 * (v[i].x[1] + v[0].x[1])};
          v[i].f = eval(v[i].x);
        }
      }
    }
    order();
  }
  return {v[0].x, v[0].f, evals, false};
}

}  // namespace qng

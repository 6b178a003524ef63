#pragma once

// Test-side integration oracle, deliberately independent of the library's
// Gauss-Legendre machinery: plain adaptive Simpson on the raw evaluator.
// Slow and simple beats shared bugs.

#include <cmath>
#include <functional>

namespace oracle {

inline double simpson_slice(const std::function<double(double)>& f, double a,
                            double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double fa, double fb,
                               double fm, double whole, double tol,
                               int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson_slice(f, a, fa, m, fm, flm);
  double right = simpson_slice(f, m, fm, b, fb, frm);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-11) {
  if (!(b > a)) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  double whole = simpson_slice(f, a, fa, b, fb, fm);
  return adaptive_simpson(f, a, b, fa, fb, fm, whole, tol, 48);
}

// Sampled sup with golden-ratio offsets so uniform grids cannot hide
// periodic agreement with the engine's own sampling.
inline double sampled_sup(const std::function<double(double)>& f, double a,
                          double b, int samples = 20000) {
  double best = 0.0;
  const double phi = 0.6180339887498949;
  for (int i = 0; i <= samples; ++i) {
    double u = (static_cast<double>(i) + phi * (i % 7)) / samples;
    if (u > 1.0) u = 1.0;
    double t = a + (b - a) * u;
    best = std::fmax(best, std::abs(f(t)));
  }
  return best;
}

}  // namespace oracle

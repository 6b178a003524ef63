#pragma once

#include <functional>

namespace hypermix {

/// Adaptive Gauss-Legendre integration of f over [a, b] by interval halving.
/// Stops when the two-half estimate agrees with the whole-interval estimate
/// to abs_tol (split across subintervals), or at a depth cap.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}  // namespace hypermix

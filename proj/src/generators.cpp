#include "hypermix/generators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

namespace hypermix {

namespace {

TaylorCoeffs random_taylor(Rng& rng, int max_degree) {
  int deg = rng.uniform_int(0, max_degree);
  std::vector<std::complex<double>> coeffs(static_cast<size_t>(deg) + 1);
  for (auto& c : coeffs) c = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  if (std::abs(coeffs.back()) < 0.1)
    coeffs.back() = {rng.flip() ? 1.0 : -1.0, 0.0};
  return TaylorCoeffs(std::move(coeffs));
}

BivarPoly random_bivar(Rng& rng, int max_degree) {
  int cap = std::min(max_degree, 8);
  int count = rng.uniform_int(1, 5);
  BivarPoly out;
  for (int i = 0; i < count; ++i) {
    double c = rng.uniform(0.2, 2.0) * (rng.flip() ? 1.0 : -1.0);
    out = out + BivarPoly::monomial(rng.uniform_int(0, cap),
                                    rng.uniform_int(0, cap), c);
  }
  return out;
}

PiecewiseExpPoly random_steps(Rng& rng, double w, int max_degree) {
  // Step combinations on the quarter-integer grid inside [0, max_degree].
  int grid_end = 4 * std::max(1, max_degree);
  int count = rng.uniform_int(1, 4);
  PiecewiseExpPoly out = PiecewiseExpPoly::zero(w);
  for (int i = 0; i < count; ++i) {
    int lo = rng.uniform_int(0, grid_end - 1);
    int hi = rng.uniform_int(lo + 1, grid_end);
    double c = rng.uniform(0.2, 2.0) * (rng.flip() ? 1.0 : -1.0);
    out = pw_add(out, pw_scale(c, PiecewiseExpPoly::indicator(
                                      w, Rational(lo, 4), Rational(hi, 4))));
  }
  return out;
}

PiecewiseExpPoly random_spline(Rng& rng, double w, int max_degree) {
  // Continuous piecewise-linear spline on half-integer nodes, ending at 0.
  // Node values are hit exactly, so the continuity scan sees exact matches.
  int segments = rng.uniform_int(2, 2 * std::clamp(max_degree, 1, 8));
  std::vector<double> values(static_cast<size_t>(segments) + 1);
  for (int i = 0; i < segments; ++i) values[static_cast<size_t>(i)] = rng.uniform(-2.0, 2.0);
  values.back() = 0.0;

  std::vector<Piece> pieces;
  for (int i = 0; i < segments; ++i) {
    Piece piece;
    piece.lo = Rational(i, 2);
    piece.hi = Rational(i + 1, 2);
    double v0 = values[static_cast<size_t>(i)];
    double slope = (values[static_cast<size_t>(i) + 1] - v0) * 2.0;  // / (1/2)
    piece.terms.push_back({v0, 0, Rational(0), Rational(0)});
    piece.terms.push_back({slope, 1, Rational(0), Rational(0)});
    pieces.push_back(std::move(piece));
  }
  return PiecewiseExpPoly(w, std::move(pieces));
}

}  // namespace

Element random_element(Rng& rng, const Space& space, int max_degree) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Element x;
    switch (space.kind) {
      case SpaceKind::hardy:
        x = random_taylor(rng, max_degree);
        break;
      case SpaceKind::bivar_poly:
        x = random_bivar(rng, max_degree);
        break;
      case SpaceKind::translation_lp:
        x = random_steps(rng, space.w, max_degree);
        break;
      case SpaceKind::translation_c0:
        x = random_spline(rng, space.w, max_degree);
        break;
    }
    if (!is_zero_element(space, x, 0.0)) return x;
  }
  // Unreachable in practice; the loop retries away exact cancellations.
  return zero_element(space);
}

Element random_unit_element(Rng& rng, const Space& space, int max_degree) {
  Element x = random_element(rng, space, max_degree);
  double n = norm(space, x);
  return scale(space, std::complex<double>(1.0 / n, 0.0), x);
}

BallSpec random_ball(Rng& rng, const Space& space, int max_degree,
                     double radius_lo, double radius_hi) {
  Element center = random_element(rng, space, max_degree);
  return BallSpec(space, std::move(center), rng.uniform(radius_lo, radius_hi));
}

}  // namespace hypermix

#pragma once

#include "hypermix/rational.hpp"

#include <vector>

namespace hypermix {

/// One summand of a piece, anchored at the piece's left endpoint:
///   value(t) = c * (t - lo)^d * w^{q*(t - lo) + e}.
/// Anchoring keeps coefficients O(1) under repeated weighted translation:
/// the shifts only move q and e by exact rational amounts, so the forward
/// and inverse translations cancel bit-exactly and never overflow even when
/// the global factor w^{qt} would be astronomically large or small.
struct ExpPolyTerm {
  double c = 0.0;
  int d = 0;
  Rational q{0};
  Rational e{0};
};

/// Support interval [lo, hi) with its term list.
struct Piece {
  Rational lo{0};
  Rational hi{0};
  std::vector<ExpPolyTerm> terms;
};

/// Compactly supported piecewise exponential-polynomial on [0, oo) with a
/// fixed base w > 1. Canonical form: pieces sorted and disjoint, terms merged
/// by (d, q), zero coefficients and empty pieces dropped. The continuity flag
/// is recomputed on construction; it qualifies the element for the sup-norm
/// space, whose right inverse requires continuous inputs.
class PiecewiseExpPoly {
 public:
  PiecewiseExpPoly() = default;
  explicit PiecewiseExpPoly(double base);
  PiecewiseExpPoly(double base, std::vector<Piece> pieces);

  static PiecewiseExpPoly zero(double base);
  /// Indicator of [lo, hi).
  static PiecewiseExpPoly indicator(double base, const Rational& lo,
                                    const Rational& hi);
  /// The hat (1 - t) on [0, 1): continuous, value 1 at 0.
  static PiecewiseExpPoly ramp(double base);

  double base() const { return base_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool is_continuous() const { return continuous_; }

  double eval(double t) const;
  double value_at_zero() const { return eval(0.0); }
  /// sup of the support; 0 for the zero element.
  Rational support_end() const;
  Rational support_start() const;

  /// Every term's value bound is <= tol.
  bool is_zero(double tol = 0.0) const;

 private:
  void canonicalize();

  double base_ = 2.0;
  std::vector<Piece> pieces_;
  bool continuous_ = true;
};

PiecewiseExpPoly pw_add(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
PiecewiseExpPoly pw_sub(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
PiecewiseExpPoly pw_scale(double s, const PiecewiseExpPoly& f);

/// f restricted to (0, cut]; pieces are split at cut.
PiecewiseExpPoly pw_restrict_upto(const PiecewiseExpPoly& f, const Rational& cut);
/// f restricted to (cut, oo); the complementary part.
PiecewiseExpPoly pw_restrict_from(const PiecewiseExpPoly& f, const Rational& cut);

/// (t -> w^t f(t + a)) : support shifts left by a and is clipped at 0.
PiecewiseExpPoly pw_translate_T(const PiecewiseExpPoly& f, const Rational& a);
/// (t -> w^{-(t-a)} f(t - a) for t > a, 0 otherwise): support shifts right.
PiecewiseExpPoly pw_translate_S(const PiecewiseExpPoly& f, const Rational& a);
/// Sup-norm variant: adds the interpolating ramp f(0)/a * t on [0, a).
/// Requires a continuous input.
PiecewiseExpPoly pw_translate_S_ramp(const PiecewiseExpPoly& f, const Rational& a);

/// L_p norm, p >= 1. Single-exponential pieces use the closed form; other
/// pieces use adaptive quadrature with absolute tolerance 1e-10 per piece.
/// Extreme exponent offsets are handled in log space.
double pw_lp_norm(const PiecewiseExpPoly& f, double p);

/// Sup norm over [0, oo): per-piece extrema via endpoints, the analytic
/// critical point of single-term pieces, and sampled derivative sign changes
/// refined by bisection.
double pw_sup_norm(const PiecewiseExpPoly& f);

}  // namespace hypermix

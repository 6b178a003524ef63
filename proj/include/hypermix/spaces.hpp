#pragma once

#include "hypermix/bivar_poly.hpp"
#include "hypermix/piecewise.hpp"
#include "hypermix/rational.hpp"
#include "hypermix/taylor.hpp"

#include <complex>
#include <variant>

namespace hypermix {

enum class SpaceKind {
  hardy,           // Taylor coefficients, coefficient l2 norm, complex scalars
  bivar_poly,      // normalized bivariate polynomials, Gram norm
  translation_lp,  // piecewise exp-polynomials, L_p norm with weight base w
  translation_c0,  // piecewise exp-polynomials, sup norm
};

/// Which normed space an element lives in, with the translation parameters
/// (weight base w > 1, step a > 0, exponent p >= 1) when applicable.
struct Space {
  SpaceKind kind = SpaceKind::hardy;
  double w = 0.0;
  Rational a{0};
  double p = 0.0;

  static Space hardy() { return {SpaceKind::hardy, 0.0, Rational(0), 0.0}; }
  static Space bivar_poly() { return {SpaceKind::bivar_poly, 0.0, Rational(0), 0.0}; }
  static Space translation_lp(double w, const Rational& a, double p);
  static Space translation_c0(double w, const Rational& a);

  bool operator==(const Space& other) const;
};

using Element = std::variant<TaylorCoeffs, BivarPoly, PiecewiseExpPoly>;

/// Checked accessors; throw SpaceMismatchError on the wrong alternative.
const TaylorCoeffs& as_taylor(const Element& x);
const BivarPoly& as_bivar(const Element& x);
const PiecewiseExpPoly& as_piecewise(const Element& x);

/// Element/space consistency (alternative matches kind, bases match).
void check_element(const Space& s, const Element& x);

double norm(const Space& s, const Element& x);
Element add(const Space& s, const Element& x, const Element& y);
Element sub(const Space& s, const Element& x, const Element& y);
/// Scalars are complex on the Hardy space, real elsewhere (a nonzero
/// imaginary part is rejected for the real spaces).
Element scale(const Space& s, std::complex<double> alpha, const Element& x);
double distance(const Space& s, const Element& x, const Element& y);
bool is_zero_element(const Space& s, const Element& x, double tol = 0.0);
Element zero_element(const Space& s);

/// Open ball: center plus strictly positive radius.
struct BallSpec {
  Space space;
  Element center;
  double radius = 0.0;

  BallSpec(Space s, Element c, double r);
  /// Strict membership test.
  bool contains(const Element& x) const;
};

}  // namespace hypermix

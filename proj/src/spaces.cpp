#include "hypermix/spaces.hpp"

#include "hypermix/errors.hpp"

#include <cmath>

namespace hypermix {

Space Space::translation_lp(double w, const Rational& a, double p) {
  if (!(w > 1.0)) throw std::invalid_argument("weight base must exceed 1");
  if (!(a > Rational(0))) throw std::invalid_argument("step must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  return {SpaceKind::translation_lp, w, a, p};
}

Space Space::translation_c0(double w, const Rational& a) {
  if (!(w > 1.0)) throw std::invalid_argument("weight base must exceed 1");
  if (!(a > Rational(0))) throw std::invalid_argument("step must be positive");
  return {SpaceKind::translation_c0, w, a, 0.0};
}

bool Space::operator==(const Space& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case SpaceKind::hardy:
    case SpaceKind::bivar_poly:
      return true;
    case SpaceKind::translation_lp:
      return w == other.w && a == other.a && p == other.p;
    case SpaceKind::translation_c0:
      return w == other.w && a == other.a;
  }
  return false;
}

const TaylorCoeffs& as_taylor(const Element& x) {
  if (const auto* t = std::get_if<TaylorCoeffs>(&x)) return *t;
  throw SpaceMismatchError("expected a Taylor-coefficient element");
}

const BivarPoly& as_bivar(const Element& x) {
  if (const auto* b = std::get_if<BivarPoly>(&x)) return *b;
  throw SpaceMismatchError("expected a bivariate polynomial element");
}

const PiecewiseExpPoly& as_piecewise(const Element& x) {
  if (const auto* p = std::get_if<PiecewiseExpPoly>(&x)) return *p;
  throw SpaceMismatchError("expected a piecewise exp-polynomial element");
}

void check_element(const Space& s, const Element& x) {
  switch (s.kind) {
    case SpaceKind::hardy:
      as_taylor(x);
      return;
    case SpaceKind::bivar_poly:
      as_bivar(x);
      return;
    case SpaceKind::translation_lp:
    case SpaceKind::translation_c0:
      if (as_piecewise(x).base() != s.w)
        throw SpaceMismatchError("element weight base differs from the space");
      return;
  }
}

double norm(const Space& s, const Element& x) {
  check_element(s, x);
  switch (s.kind) {
    case SpaceKind::hardy:
      return as_taylor(x).norm();
    case SpaceKind::bivar_poly:
      return as_bivar(x).norm();
    case SpaceKind::translation_lp:
      return pw_lp_norm(as_piecewise(x), s.p);
    case SpaceKind::translation_c0:
      return pw_sup_norm(as_piecewise(x));
  }
  return 0.0;
}

Element add(const Space& s, const Element& x, const Element& y) {
  check_element(s, x);
  check_element(s, y);
  switch (s.kind) {
    case SpaceKind::hardy:
      return as_taylor(x) + as_taylor(y);
    case SpaceKind::bivar_poly:
      return as_bivar(x) + as_bivar(y);
    default:
      return pw_add(as_piecewise(x), as_piecewise(y));
  }
}

Element sub(const Space& s, const Element& x, const Element& y) {
  return add(s, x, scale(s, -1.0, y));
}

Element scale(const Space& s, std::complex<double> alpha, const Element& x) {
  check_element(s, x);
  if (s.kind != SpaceKind::hardy && alpha.imag() != 0.0)
    throw SpaceMismatchError("complex scalars only act on the Hardy space");
  switch (s.kind) {
    case SpaceKind::hardy:
      return alpha * as_taylor(x);
    case SpaceKind::bivar_poly:
      return alpha.real() * as_bivar(x);
    default:
      return pw_scale(alpha.real(), as_piecewise(x));
  }
}

double distance(const Space& s, const Element& x, const Element& y) {
  return norm(s, sub(s, x, y));
}

bool is_zero_element(const Space& s, const Element& x, double tol) {
  check_element(s, x);
  switch (s.kind) {
    case SpaceKind::hardy:
      return as_taylor(x).is_zero(tol);
    case SpaceKind::bivar_poly:
      return as_bivar(x).is_zero(tol);
    default:
      return as_piecewise(x).is_zero(tol);
  }
}

Element zero_element(const Space& s) {
  switch (s.kind) {
    case SpaceKind::hardy:
      return TaylorCoeffs();
    case SpaceKind::bivar_poly:
      return BivarPoly();
    default:
      return PiecewiseExpPoly::zero(s.w);
  }
}

BallSpec::BallSpec(Space s, Element c, double r)
    : space(std::move(s)), center(std::move(c)), radius(r) {
  if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  check_element(space, center);
}

bool BallSpec::contains(const Element& x) const {
  return distance(space, center, x) < radius;
}

}  // namespace hypermix

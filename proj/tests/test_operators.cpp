#include "doctest.h"

#include "hypermix/errors.hpp"
#include "hypermix/generators.hpp"
#include "hypermix/operators.hpp"

#include <cmath>
#include <complex>
#include <limits>

using namespace hypermix;
using cx = std::complex<double>;

namespace {

std::vector<OperatorConfig> all_ops() {
  return {OperatorConfig::derivative(), OperatorConfig::laplacian(),
          OperatorConfig::translation_lp(2.0, Rational(1), 1.0),
          OperatorConfig::translation_lp(1.5, Rational(1, 2), 2.0),
          OperatorConfig::translation_c0(2.0, Rational(1)),
          OperatorConfig::translation_c0(3.0, Rational(1, 3))};
}

}  // namespace

TEST_CASE("differentiation and integration act on coefficients") {
  OperatorConfig d = OperatorConfig::derivative();
  TaylorCoeffs f = as_taylor(apply_T(d, TaylorCoeffs({cx(1), cx(0), cx(0), cx(2)})));
  CHECK(f.degree() == 2);
  CHECK(f.coeff(2) == cx(6));

  TaylorCoeffs s = as_taylor(apply_S(d, TaylorCoeffs::constant(1.0)));
  CHECK(s.degree() == 1);
  CHECK(s.coeff(1) == cx(1));
  CHECK(s.coeff(0) == cx(0));

  // S^3 applied to the constant 2 is z^3 / 3.
  Element u = iterate(d, 3, TaylorCoeffs::constant(2.0), true).value;
  CHECK(as_taylor(u).coeff(3).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("laplacian basis action matches the two-step recurrence") {
  OperatorConfig lap = OperatorConfig::laplacian();

  // X_2 Y_2 maps to X_0 Y_2 + X_2 Y_0.
  BivarPoly t = as_bivar(apply_T(lap, BivarPoly::monomial(2, 2)));
  CHECK(t.terms().size() == 2);
  CHECK(t.terms().at({0, 2}) == 1.0);
  CHECK(t.terms().at({2, 0}) == 1.0);

  // Low degrees vanish; X_1 Y_1 is a nonzero kernel element.
  CHECK(as_bivar(apply_T(lap, BivarPoly::monomial(1, 1))).is_zero());
  CHECK(as_bivar(apply_T(lap, BivarPoly::monomial(0, 0))).is_zero());

  // The inverse series: X_0 Y_0 -> X_0 Y_2; X_2 Y_0 -> X_2 Y_2 - X_0 Y_4.
  BivarPoly s0 = as_bivar(apply_S(lap, BivarPoly::monomial(0, 0)));
  CHECK(s0.terms().size() == 1);
  CHECK(s0.terms().at({0, 2}) == 1.0);

  BivarPoly s2 = as_bivar(apply_S(lap, BivarPoly::monomial(2, 0)));
  CHECK(s2.terms().size() == 2);
  CHECK(s2.terms().at({2, 2}) == 1.0);
  CHECK(s2.terms().at({0, 4}) == -1.0);
}

TEST_CASE("laplacian inverse cancels exactly on the basis") {
  OperatorConfig lap = OperatorConfig::laplacian();
  Space s = Space::bivar_poly();
  for (int n = 0; n <= 20; ++n) {
    for (int l = 0; l <= 20; ++l) {
      Element x = BivarPoly::monomial(n, l);
      Element back = apply_T(lap, apply_S(lap, x));
      CHECK(is_zero_element(s, sub(s, back, x), 0.0));
    }
  }
}

TEST_CASE("every family satisfies T(Sf) = f on random elements") {
  Rng rng(21);
  for (const OperatorConfig& op : all_ops()) {
    Space s = op.space();
    for (int i = 0; i < 20; ++i) {
      Element f = random_element(rng, s);
      Element back = apply_T(op, apply_S(op, f));
      CHECK(distance(s, back, f) <= 1e-10);
    }
  }
}

TEST_CASE("S(Tf) loses the kernel part, so S is only a right inverse") {
  OperatorConfig d = OperatorConfig::derivative();
  Element f = TaylorCoeffs({cx(5), cx(1)});  // 5 + z
  Element st = apply_S(d, apply_T(d, f));
  CHECK(as_taylor(st).coeff(0) == cx(0));  // the constant died
  CHECK(as_taylor(st).coeff(1) == cx(1));
}

TEST_CASE("integration contracts by 1/n") {
  Rng rng(22);
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  for (int i = 0; i < 10; ++i) {
    Element f = random_unit_element(rng, s, 40);
    Element g = f;
    for (int n = 1; n <= 30; ++n) {
      g = apply_S(d, g);
      CHECK(norm(s, g) <= 1.0 / n * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("weighted right translation follows the closed form") {
  OperatorConfig op = OperatorConfig::translation_lp(2.0, Rational(1), 1.0);
  PiecewiseExpPoly chi = PiecewiseExpPoly::indicator(2.0, Rational(0), Rational(1));
  PiecewiseExpPoly s = as_piecewise(apply_S(op, chi));
  CHECK(s.support_start() == Rational(1));
  CHECK(s.support_end() == Rational(2));
  for (double t : {1.0, 1.25, 1.75}) {
    CHECK(s.eval(t) == doctest::Approx(std::pow(2.0, -(t - 1.0))).epsilon(1e-14));
  }

  PiecewiseExpPoly back = as_piecewise(apply_T(op, s));
  CHECK(pw_sub(back, chi).is_zero(0.0));
}

TEST_CASE("sup-norm translation inserts the interpolating ramp") {
  OperatorConfig op = OperatorConfig::translation_c0(2.0, Rational(1));
  PiecewiseExpPoly hat = PiecewiseExpPoly::ramp(2.0);

  PiecewiseExpPoly s = as_piecewise(apply_S(op, hat));
  CHECK(s.is_continuous());
  CHECK(s.eval(0.0) == 0.0);
  // Ramp segment t * f(0) / a on [0, a), then the weighted shift.
  CHECK(s.eval(0.5) == doctest::Approx(0.5).epsilon(1e-14));
  for (double t : {1.0, 1.5, 1.75}) {
    double expect = std::pow(2.0, -(t - 1.0)) * (2.0 - t);
    CHECK(s.eval(t) == doctest::Approx(expect).epsilon(1e-14));
  }

  // T undoes it including the ramp: T adds back what the clip removes.
  PiecewiseExpPoly back = as_piecewise(apply_T(op, s));
  // The ramp lives below a and is clipped away; the rest reproduces hat.
  CHECK(pw_sup_norm(pw_sub(back, hat)) <= 1e-14);

  // No ramp when the input vanishes at zero.
  PiecewiseExpPoly s2 = as_piecewise(apply_S(op, s));
  CHECK(s2.support_start() >= Rational(1));
  CHECK(s2.eval(0.5) == 0.0);

  // Discontinuous input has no continuous extension; S must refuse.
  Element chi = PiecewiseExpPoly::indicator(2.0, Rational(0), Rational(1));
  CHECK_THROWS_AS(apply_S(op, chi), std::invalid_argument);
}

TEST_CASE("second sup-norm shift of the hat peaks at one half") {
  OperatorConfig op = OperatorConfig::translation_c0(2.0, Rational(1));
  Space s = op.space();
  Element g = iterate(op, 2, PiecewiseExpPoly::ramp(2.0), true).value;
  CHECK(norm(s, g) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("iterate composes and reports capacity") {
  OperatorConfig d = OperatorConfig::derivative();
  Element f = TaylorCoeffs({cx(1), cx(1)});

  IterateResult r0 = iterate(d, 0, f);
  CHECK(distance(Space::hardy(), r0.value, f) == 0.0);

  // A coefficient at the float ceiling overflows after one differentiation
  // of degree two: 2 * 1e308 -> inf.
  Element big = TaylorCoeffs({cx(0), cx(0), cx(1e308)});
  CHECK_THROWS_AS(iterate(d, 3, big), CapacityError);
  try {
    iterate(d, 3, big);
  } catch (const CapacityError& ex) {
    CHECK(ex.max_safe_k == 0);
  }
}

TEST_CASE("deep translation iterates pass the symbolic exponent check") {
  for (const OperatorConfig& op :
       {OperatorConfig::translation_lp(4.0, Rational(1), 2.0),
        OperatorConfig::translation_c0(4.0, Rational(2, 3))}) {
    Space s = op.space();
    Rng rng(23);
    Element f = random_element(rng, s, 4);
    Element shifted = iterate(op, 64, f, true).value;  // would overflow naively
    Element back = iterate(op, 64, shifted).value;
    CHECK(distance(s, back, f) == 0.0);  // bit-exact round trip
  }
}

TEST_CASE("operator parameter validation") {
  CHECK_THROWS_AS(OperatorConfig::translation_lp(1.0, Rational(1), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(OperatorConfig::translation_lp(2.0, Rational(-1), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(OperatorConfig::translation_c0(2.0, Rational(0)),
                  std::invalid_argument);

  OperatorConfig lp = OperatorConfig::translation_lp(2.0, Rational(1), 1.0);
  CHECK_THROWS_AS(apply_T(lp, TaylorCoeffs::constant(1.0)), SpaceMismatchError);
}

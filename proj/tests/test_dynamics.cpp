#include "doctest.h"

#include "hypermix/dynamics.hpp"
#include "hypermix/errors.hpp"
#include "hypermix/generators.hpp"
#include "hypermix/numeric.hpp"

#include <cmath>
#include <complex>

using namespace hypermix;
using cx = std::complex<double>;

TEST_CASE("criterion table rows decay like 1/n! for integration") {
  OperatorConfig d = OperatorConfig::derivative();
  Element x = TaylorCoeffs::constant(1.0);
  // 1/14! is the first factorial below the default 1e-10 verdict tolerance.
  DecayTable t = hm_criterion_table(d, x, x, 14);
  REQUIRE(t.rows.size() == 14);
  for (const DecayRow& row : t.rows) {
    CHECK(row.s_norm ==
          doctest::Approx(inv_factorial(row.n)).epsilon(1e-12));
    CHECK(row.kernel_gap == 0.0);  // the constant target saturates at n = 1
    CHECK(row.combined <= row.s_norm + row.kernel_gap + 1e-15);
  }
  CHECK(t.pass);
}

TEST_CASE("witness run for the integration operator around zero") {
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  BallSpec U(s, TaylorCoeffs(), 0.5);
  Element y = TaylorCoeffs::constant(1.0);

  WitnessSet set = hm_witnesses(d, U, y, 10);
  // delta_n = 1/n!: n = 2 sits exactly on the boundary (1/2 not < 1/2),
  // so the strict run starts at 3.
  CHECK(set.first_index == 3);
  CHECK(set.bound_mode == BoundMode::analytic);
  REQUIRE(set.certificates.size() == 8);
  for (const WitnessCertificate& cert : set.certificates) {
    CHECK(cert.inside);
    CHECK(cert.delta ==
          doctest::Approx(inv_factorial(cert.n)).epsilon(1e-12));
    CHECK(cert.residual <= 1e-10);
    Element image = iterate(d, cert.n, cert.u_n).value;
    CHECK(distance(s, image, y) <= 1e-10);
  }
}

TEST_CASE("an early hit does not start the run if later indices fail") {
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  BallSpec U(s, TaylorCoeffs::monomial(1), 0.1);  // center z
  Element y = TaylorCoeffs::constant(1.0);

  // u_1 = z exactly (delta 0), but u_2 and u_3 leave the ball, so the
  // eventually-always index is 4.
  WitnessSet set = hm_witnesses(d, U, y, 10);
  CHECK(set.first_index == 4);
  CHECK(set.certificates[0].delta ==
        doctest::Approx(1.0 / 24.0).epsilon(1e-12));
}

TEST_CASE("witness search reports the decay profile when the range is too short") {
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  BallSpec U(s, TaylorCoeffs(), 1e-6);
  Element y = TaylorCoeffs::constant(1.0);
  try {
    hm_witnesses(d, U, y, 5);
    FAIL("expected NoWitnessInRange");
  } catch (const NoWitnessInRange& ex) {
    REQUIRE(ex.deltas.size() == 6);  // n = 0..5
    CHECK(ex.deltas[0].first == 0);
    CHECK(ex.deltas[5].second == doctest::Approx(inv_factorial(5)));
  }
}

TEST_CASE("single-witness search returns the first index") {
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  // ||z^2|| = 1 is not strictly inside radius 1; n = 3 gives z^3/3.
  WitnessCertificate cert =
      stt_witness(d, BallSpec(s, TaylorCoeffs(), 1.0), TaylorCoeffs::constant(2.0), 10);
  CHECK(cert.n == 3);
  CHECK(cert.delta == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(as_taylor(cert.u_n).coeff(3).real() ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  OperatorConfig lap = OperatorConfig::laplacian();
  Space bp = Space::bivar_poly();
  WitnessCertificate c2 = stt_witness(
      lap, BallSpec(bp, BivarPoly(), 0.9), BivarPoly::monomial(0, 0), 10);
  CHECK(c2.n == 1);
  CHECK(c2.delta == doctest::Approx(std::sqrt(1.0 / 20.0)).epsilon(1e-12));

  CHECK_THROWS_AS(
      stt_witness(d, BallSpec(s, TaylorCoeffs(), 1.0), TaylorCoeffs(), 10),
      std::invalid_argument);
}

TEST_CASE("zero witnesses saturate through the kernel") {
  OperatorConfig op = OperatorConfig::translation_lp(2.0, Rational(1), 1.0);
  Space s = op.space();
  Element chi = PiecewiseExpPoly::indicator(2.0, Rational(0), Rational(3));
  WitnessSet set = zero_witness(op, BallSpec(s, chi, 0.5), 8);
  CHECK(set.first_index == 3);  // delta_n = max(0, 3 - n)
  CHECK(set.bound_mode == BoundMode::analytic);
  for (const WitnessCertificate& cert : set.certificates) {
    CHECK(cert.delta == 0.0);
    CHECK(cert.residual == 0.0);
  }

  OperatorConfig lap = OperatorConfig::laplacian();
  Space bp = Space::bivar_poly();
  WitnessSet lset =
      zero_witness(lap, BallSpec(bp, BivarPoly::monomial(1, 1), 0.2), 8);
  CHECK(lset.first_index == 2);  // delta_1 = 1/3 misses the 0.2 ball
}

TEST_CASE("transitivity witness connects two balls") {
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  BallSpec U(s, TaylorCoeffs(), 1.0);
  BallSpec V(s, TaylorCoeffs::constant(2.0), 0.5);
  WitnessCertificate cert = transitivity_witness(d, U, V, 10);
  CHECK(cert.n == 3);
  CHECK(cert.delta == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(cert.residual <= 1e-10);

  // The image must land strictly inside V even when V is tiny.
  BallSpec Vtiny(s, TaylorCoeffs::constant(2.0), 1e-13);
  WitnessCertificate tight = transitivity_witness(d, U, Vtiny, 10);
  CHECK(tight.residual < 1e-13);
}

TEST_CASE("sup-norm transitivity rides the corrected decay") {
  OperatorConfig op = OperatorConfig::translation_c0(2.0, Rational(1));
  Space s = op.space();
  Element hat = PiecewiseExpPoly::ramp(2.0);
  BallSpec U(s, PiecewiseExpPoly::zero(2.0), 0.6);
  BallSpec V(s, hat, 0.5);
  WitnessCertificate cert = transitivity_witness(op, U, V, 10);
  // ||S hat|| = 1 (the ramp tops out at the joint), ||S^2 hat|| = 1/2 < 0.6.
  CHECK(cert.n == 2);
  CHECK(cert.delta == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("leading-coefficient polynomials are exact and eventually inside") {
  Space s = Space::hardy();
  LeadingPolySet set =
      leading_polynomials(cx(1.0, 0.0), BallSpec(s, TaylorCoeffs(), 0.5), 10);
  CHECK(set.first_index == 3);  // 1/2! sits exactly on the boundary
  CHECK(set.bound_mode == BoundMode::analytic);
  int n = set.first_index;
  for (const TaylorCoeffs& p : set.polynomials) {
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == cx(1.0, 0.0) / factorial(n));
    ++n;
  }

  // Center z^2 with alpha = 2: p_2 = z^2 exactly (delta 0) but p_3 misses,
  // so the run starts at 4.
  LeadingPolySet shifted = leading_polynomials(
      cx(2.0, 0.0), BallSpec(s, TaylorCoeffs::monomial(2), 0.2), 10);
  CHECK(shifted.first_index == 4);

  CHECK_THROWS_AS(
      leading_polynomials(cx(0.0, 0.0), BallSpec(s, TaylorCoeffs(), 0.5), 10),
      std::invalid_argument);
}

TEST_CASE("periodic vectors have factorially small defects") {
  PeriodicVector v22 = periodic_vector_derivative(2, 2);
  CHECK(v22.lambda == cx(-1.0, 0.0));
  CHECK(v22.f.coeff(0) == cx(1.0, 0.0));
  CHECK(v22.f.coeff(1) == cx(-1.0, 0.0));
  CHECK(v22.f.coeff(2) == cx(0.5, 0.0));
  CHECK(v22.defect == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));

  PeriodicVector v120 = periodic_vector_derivative(1, 20);
  CHECK(v120.defect == doctest::Approx(inv_factorial(20)).epsilon(1e-12));

  // Small degrees double-check against a float iteration of D^N f - f.
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  for (int period = 1; period <= 4; ++period) {
    PeriodicVector v = periodic_vector_derivative(period, 8);
    Element image = iterate(d, period, v.f).value;
    double direct = distance(s, image, v.f);
    CHECK(v.defect == doctest::Approx(direct).epsilon(1e-9));
  }

  // The quarter roots are exact, so period 4 stays on the axes.
  PeriodicVector v4 = periodic_vector_derivative(4, 6);
  CHECK(v4.lambda == cx(0.0, 1.0));
  CHECK(v4.f.coeff(2) == cx(-0.5, 0.0));

  CHECK_THROWS_AS(periodic_vector_derivative(0, 5), std::invalid_argument);
}

TEST_CASE("witness sets hold up across random instances in every family") {
  Rng rng(41);
  std::vector<OperatorConfig> ops = {
      OperatorConfig::derivative(), OperatorConfig::laplacian(),
      OperatorConfig::translation_lp(2.0, Rational(1), 1.0),
      OperatorConfig::translation_c0(2.0, Rational(1))};
  for (const OperatorConfig& op : ops) {
    Space s = op.space();
    for (int i = 0; i < 4; ++i) {
      BallSpec U = random_ball(rng, s, 5, 0.1, 1.0);
      Element y = random_unit_element(rng, s, 5);
      WitnessSet set = hm_witnesses(op, U, y, 64);
      CHECK(set.first_index <= 64);
      if (op.kind != OperatorKind::laplacian)
        CHECK(set.bound_mode == BoundMode::analytic);
      for (size_t j = 0; j < set.certificates.size(); j += 7) {
        const WitnessCertificate& cert = set.certificates[j];
        CHECK(cert.inside);
        Element image = iterate(op, cert.n, cert.u_n).value;
        CHECK(distance(s, image, y) <= 1e-10);
      }
    }
  }
}

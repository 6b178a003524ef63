#include "doctest.h"

#include "hypermix/generators.hpp"
#include "hypermix/kernels.hpp"

#include <cmath>
#include <complex>

using namespace hypermix;
using cx = std::complex<double>;

TEST_CASE("coefficient truncation projects onto Ker D^n") {
  OperatorConfig d = OperatorConfig::derivative();
  Element f = TaylorCoeffs({cx(1), cx(1), cx(1)});  // 1 + z + z^2

  KernelProjection p2 = kernel_project(d, f, 2);
  CHECK(as_taylor(p2.w_n).degree() == 1);
  CHECK(p2.gap == doctest::Approx(1.0).epsilon(1e-15));  // ||z^2||
  CHECK(is_in_kernel(d, p2.w_n, 2));
  CHECK_FALSE(is_in_kernel(d, f, 2));

  KernelProjection p3 = kernel_project(d, f, 3);
  CHECK(p3.gap == 0.0);
  CHECK(distance(Space::hardy(), p3.w_n, f) == 0.0);
}

TEST_CASE("total-degree truncation projects onto the laplacian kernel class") {
  OperatorConfig lap = OperatorConfig::laplacian();
  Element f = BivarPoly::monomial(1, 1);

  KernelProjection p1 = kernel_project(lap, f, 1);
  CHECK(as_bivar(p1.w_n).is_zero());
  CHECK(p1.gap == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  KernelProjection p2 = kernel_project(lap, f, 2);
  CHECK(p2.gap == 0.0);

  // The class is sound (inside Ker), not maximal: X_1 Y_1 already lies in
  // Ker at n = 1 even though the degree cut excludes it.
  CHECK(is_in_kernel(lap, f, 1));
}

TEST_CASE("support truncation projects for the translations") {
  OperatorConfig op = OperatorConfig::translation_lp(2.0, Rational(1), 1.0);
  Element chi = PiecewiseExpPoly::indicator(2.0, Rational(0), Rational(3));
  for (int n = 1; n <= 3; ++n) {
    KernelProjection p = kernel_project(op, chi, n);
    CHECK(p.gap == doctest::Approx(3.0 - n).epsilon(1e-12));
    CHECK(as_piecewise(p.w_n).support_end() <= Rational(n));
    CHECK(is_in_kernel(op, p.w_n, n));
  }
  CHECK(kernel_project(op, chi, 7).gap == 0.0);
}

TEST_CASE("saturation indices follow the data") {
  OperatorConfig d = OperatorConfig::derivative();
  CHECK(kernel_saturation_index(d, TaylorCoeffs::constant(2.0)) == 1);
  CHECK(kernel_saturation_index(d, TaylorCoeffs::monomial(5)) == 6);
  CHECK(kernel_saturation_index(d, TaylorCoeffs()) == 1);

  OperatorConfig lap = OperatorConfig::laplacian();
  CHECK(kernel_saturation_index(lap, BivarPoly::monomial(0, 0)) == 1);
  CHECK(kernel_saturation_index(lap, BivarPoly::monomial(1, 1)) == 2);
  CHECK(kernel_saturation_index(lap, BivarPoly::monomial(2, 3)) == 3);
  CHECK(kernel_saturation_index(lap, BivarPoly()) == 1);

  OperatorConfig tr = OperatorConfig::translation_c0(2.0, Rational(1, 3));
  Element hat = PiecewiseExpPoly::ramp(2.0);
  CHECK(kernel_saturation_index(tr, hat) == 3);  // support 1, step 1/3
  OperatorConfig tr2 = OperatorConfig::translation_lp(2.0, Rational(2, 3), 1.0);
  Element chi = PiecewiseExpPoly::indicator(2.0, Rational(0), Rational(1));
  CHECK(kernel_saturation_index(tr2, chi) == 2);  // ceil(3/2)
}

TEST_CASE("gap tables are nonincreasing and saturate exactly where predicted") {
  Rng rng(31);
  std::vector<OperatorConfig> ops = {
      OperatorConfig::derivative(), OperatorConfig::laplacian(),
      OperatorConfig::translation_lp(1.5, Rational(1, 2), 2.0),
      OperatorConfig::translation_c0(2.0, Rational(1))};
  for (const OperatorConfig& op : ops) {
    Space s = op.space();
    // Coefficient tails and support tails shrink monotonically because those
    // norms split orthogonally across the cut. The bivariate norm does not:
    // its Gram matrix couples degrees, so dropping low-degree terms can undo
    // a cancellation and leave a larger tail. Only saturation is asserted
    // there.
    bool tail_is_monotone = op.kind != OperatorKind::laplacian;
    for (int i = 0; i < 12; ++i) {
      Element x = random_element(rng, s, 6);
      int predicted = kernel_saturation_index(op, x);
      REQUIRE(predicted >= 1);
      std::vector<GkRow> rows = gk_density_table(op, x, predicted + 3);
      for (size_t j = 0; j < rows.size(); ++j) {
        if (j > 0 && tail_is_monotone)
          CHECK(rows[j].gap <= rows[j - 1].gap + 1e-14);
        CHECK(rows[j].saturated == (rows[j].gap == 0.0));
        bool at_or_past = rows[j].n >= predicted;
        CHECK(rows[j].saturated == at_or_past);
      }
    }
  }
}

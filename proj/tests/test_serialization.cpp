#include "doctest.h"

#include "hypermix/generators.hpp"
#include "hypermix/numeric.hpp"
#include "hypermix/serialization.hpp"

#include <algorithm>
#include <complex>
#include <string>

using namespace hypermix;
using cx = std::complex<double>;

TEST_CASE("report formatting keeps 12 significant digits") {
  CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig12(0.5) == "0.5");
  CHECK(format_sig12(0.0) == "0");
  CHECK(format_sig12(1e-28) == "1e-28");
  CHECK(round_sig12(round_sig12(1.0 / 3.0)) == round_sig12(1.0 / 3.0));
}

TEST_CASE("rationals serialize as exact fraction strings") {
  CHECK(to_string(Rational(1, 2)) == "1/2");
  // whole numbers keep the explicit denominator; one shape for every value
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-5, 10)) == "-1/2");
  CHECK(rational_from_string("7/4") == Rational(7, 4));
  CHECK(rational_from_string("-0.25") == Rational(-1, 4));
  CHECK(rational_from_string("12") == Rational(12));
  CHECK_THROWS(rational_from_string("1/0"));
  CHECK_THROWS(rational_from_string("abc"));
}

TEST_CASE("elements survive JSON round-trips unchanged") {
  Rng rng(51);
  std::vector<Space> spaces = {
      Space::hardy(), Space::bivar_poly(),
      Space::translation_lp(2.0, Rational(1, 2), 2.0),
      Space::translation_c0(1.5, Rational(1))};
  for (const Space& s : spaces) {
    for (int i = 0; i < 10; ++i) {
      Element x = random_element(rng, s);
      json j = element_to_json(s, x);
      Space s2;
      Element back = element_from_json(json::parse(dump_json(j)), &s2);
      CHECK(s2 == s);
      CHECK(is_zero_element(s, sub(s, back, x), 0.0));
    }
  }
}

TEST_CASE("translated elements keep their exact exponents through JSON") {
  OperatorConfig op = OperatorConfig::translation_lp(4.0, Rational(1), 2.0);
  Space s = op.space();
  Element f = PiecewiseExpPoly::indicator(4.0, Rational(0), Rational(1));
  Element deep = iterate(op, 40, f, true).value;  // exponents ~ -780
  json j = element_to_json(s, deep);
  Element back = element_from_json(j);
  // Bit-exact: runs T^40 on the reparsed element and lands on f again.
  Element restored = iterate(op, 40, back).value;
  CHECK(distance(s, restored, f) == 0.0);
}

TEST_CASE("operator and ball configurations round-trip") {
  std::vector<OperatorConfig> ops = {
      OperatorConfig::derivative(), OperatorConfig::laplacian(),
      OperatorConfig::translation_lp(1.5, Rational(2, 3), 2.0),
      OperatorConfig::translation_c0(2.0, Rational(1, 4))};
  for (const OperatorConfig& op : ops) {
    OperatorConfig back = op_from_json(json::parse(op_to_json(op).dump()));
    CHECK(back == op);
  }

  Rng rng(52);
  Space s = Space::translation_lp(1.5, Rational(2, 3), 2.0);
  BallSpec U = random_ball(rng, s);
  BallSpec back = ball_from_json(json::parse(dump_json(ball_to_json(U))));
  CHECK(back.space == s);
  CHECK(back.radius == doctest::Approx(U.radius).epsilon(1e-11));
  CHECK(is_zero_element(s, sub(s, back.center, U.center), 0.0));
}

TEST_CASE("malformed JSON is rejected with a field path") {
  CHECK_THROWS_AS(element_from_json(json::parse("{}")), ParseError);
  CHECK_THROWS_AS(op_from_json(json::parse(R"({"variant":"nope"})")), ParseError);
  CHECK_THROWS_AS(
      op_from_json(json::parse(R"({"variant":"translation-lp","w":2})")),
      ParseError);
  CHECK_THROWS_AS(
      ball_from_json(json::parse(
          R"({"center":{"space":{"kind":"hardy"},"data":{"coeffs":[]}},"radius":0})")),
      ParseError);
  try {
    element_from_json(json::parse(R"({"space":{"kind":"hardy"},"data":{}})"));
    FAIL("expected ParseError");
  } catch (const ParseError& ex) {
    CHECK(std::string(ex.what()).find("coeffs") != std::string::npos);
  }

  // Bad piecewise data: negative interval.
  json j = json::parse(R"({
    "space": {"kind": "translation_lp", "w": 2.0, "a": "1", "p": 1.0},
    "data": {"pieces": [{"lo": "-1", "hi": "1", "terms": [{"c": 1.0, "d": 0, "q": "0", "e": "0"}]}]}
  })");
  CHECK_THROWS_AS(element_from_json(j), ParseError);
}

TEST_CASE("witness artifacts serialize deterministically") {
  OperatorConfig d = OperatorConfig::derivative();
  Space s = Space::hardy();
  BallSpec U(s, TaylorCoeffs(), 0.5);
  WitnessSet set = hm_witnesses(d, U, TaylorCoeffs::constant(1.0), 8);

  json j = witness_set_to_json(set);
  CHECK(j["first_index"] == 3);
  CHECK(j["bound_mode"] == "analytic");
  CHECK(j["certificates"].size() == 6);
  CHECK(j["certificates"][0]["n"] == 3);
  CHECK(j["certificates"][0]["inside"] == true);

  std::string once = dump_json(j);
  std::string twice = dump_json(witness_set_to_json(
      hm_witnesses(d, U, TaylorCoeffs::constant(1.0), 8)));
  CHECK(once == twice);
}

TEST_CASE("csv tables have fixed headers and full rows") {
  OperatorConfig d = OperatorConfig::derivative();
  DecayTable t = hm_criterion_table(d, TaylorCoeffs::constant(1.0),
                                    TaylorCoeffs::constant(1.0), 4);
  std::string csv = decay_table_csv(t);
  CHECK(csv.substr(0, 30) == "n,s_norm,kernel_gap,combined\n1");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

  std::vector<GkRow> rows = gk_density_table(
      d, TaylorCoeffs({cx(1), cx(1), cx(1)}), 4);
  std::string gk = gk_table_csv(rows);
  CHECK(gk.substr(0, 16) == "n,gap,saturated\n");
  CHECK(gk.find(",true\n") != std::string::npos);
  CHECK(gk.find(",false\n") != std::string::npos);
}

#include "hypermix/verify.hpp"

#include <algorithm>

#include "hypermix/dynamics.hpp"
#include "hypermix/generators.hpp"
#include "hypermix/numeric.hpp"
#include "hypermix/parse.hpp"
#include "hypermix/serialization.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>
#include <utility>

namespace hypermix {

namespace {

std::vector<Space> sweep_spaces() {
  return {Space::hardy(),
          Space::bivar_poly(),
          Space::translation_lp(2.0, Rational(1), 1.0),
          Space::translation_lp(1.5, Rational(1, 2), 2.0),
          Space::translation_c0(2.0, Rational(1)),
          Space::translation_c0(3.0, Rational(1, 3))};
}

OperatorConfig op_for(const Space& s) {
  switch (s.kind) {
    case SpaceKind::hardy: return OperatorConfig::derivative();
    case SpaceKind::bivar_poly: return OperatorConfig::laplacian();
    case SpaceKind::translation_lp:
      return OperatorConfig::translation_lp(s.w, s.a, s.p);
    case SpaceKind::translation_c0:
      return OperatorConfig::translation_c0(s.w, s.a);
  }
  return OperatorConfig::derivative();
}

std::string space_label(const Space& s) {
  return space_to_json(s).dump();
}

struct Check {
  std::string name;
  std::function<std::string(Rng&)> body;  // empty string on pass
};

std::string fail_msg(const Space& s, const std::string& what) {
  return what + " [" + space_label(s) + "]";
}

// T(S f) = f on random representable elements, every family.
std::string check_right_inverse(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    for (int i = 0; i < 25; ++i) {
      Element f = random_element(rng, s);
      double err = distance(s, apply_T(op, apply_S(op, f)), f);
      if (!(err <= 1e-10))
        return fail_msg(s, "||T(Sf) - f|| = " + format_sig12(err));
    }
  }
  return "";
}

// ||S^n f|| <= ||f|| / n on the coefficient space.
std::string check_integration_bound(Rng& rng) {
  Space s = Space::hardy();
  OperatorConfig op = OperatorConfig::derivative();
  for (int i = 0; i < 20; ++i) {
    Element f = random_unit_element(rng, s, 30);
    Element g = f;
    for (int n = 1; n <= 20; ++n) {
      g = apply_S(op, g);
      double bound = 1.0 / n + 1e-12;
      double got = norm(s, g);
      if (!(got <= bound))
        return "||S^" + std::to_string(n) + " f|| = " + format_sig12(got) +
               " > 1/n";
    }
  }
  return "";
}

// The alternating inverse series cancels exactly on every basis element.
std::string check_laplacian_inverse(Rng&) {
  OperatorConfig op = OperatorConfig::laplacian();
  Space s = Space::bivar_poly();
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= 12; ++l) {
      Element x = BivarPoly::monomial(n, l);
      Element back = apply_T(op, apply_S(op, x));
      Element diff = sub(s, back, x);
      if (!is_zero_element(s, diff, 0.0))
        return "inverse not exact on (" + std::to_string(n) + "," +
               std::to_string(l) + ")";
    }
  }
  return "";
}

// ||S^n f||_p <= w^{-a n(n-1)/2} ||f||_p, engine norms.
std::string check_translation_decay(Rng& rng) {
  for (double w : {1.5, 2.0}) {
    for (const Rational& a : {Rational(1), Rational(1, 2)}) {
      for (double p : {1.0, 2.0}) {
        Space s = Space::translation_lp(w, a, p);
        OperatorConfig op = op_for(s);
        for (int i = 0; i < 5; ++i) {
          Element f = random_element(rng, s, 6);
          double base = norm(s, f);
          Element g = f;
          for (int n = 1; n <= 8; ++n) {
            g = apply_S(op, g);
            double bound = base * std::pow(w, -to_double(a) * 0.5 * n * (n - 1));
            double got = norm(s, g);
            if (!(got <= bound * (1.0 + 1e-8)))
              return fail_msg(s, "decay violated at n = " + std::to_string(n) +
                                     ": " + format_sig12(got) + " > " +
                                     format_sig12(bound));
          }
        }
      }
    }
  }
  return "";
}

// combined(n) <= s_norm(n) + kernel_gap(n) row by row.
std::string check_table_triangle(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    Element x = random_element(rng, s, 6);
    Element y = random_element(rng, s, 6);
    DecayTable t = hm_criterion_table(op, x, y, 16, 1e-10);
    for (const DecayRow& row : t.rows) {
      if (!(row.combined <= row.s_norm + row.kernel_gap + 1e-12))
        return fail_msg(s, "triangle inequality failed at n = " +
                               std::to_string(row.n));
    }
  }
  return "";
}

std::string reverify_certificate(const Space& s, const OperatorConfig& op,
                                 const WitnessCertificate& cert,
                                 const Element& center, const Element& target) {
  double delta = distance(s, cert.u_n, center);
  if (!(delta < cert.radius))
    return "certificate n = " + std::to_string(cert.n) + " not inside ball";
  Element image = iterate(op, cert.n, cert.u_n).value;
  double residual = distance(s, image, target);
  if (!(residual <= 1e-10))
    return "certificate n = " + std::to_string(cert.n) +
           " residual = " + format_sig12(residual);
  return "";
}

std::string check_hm_witnesses(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    for (int i = 0; i < 3; ++i) {
      BallSpec U = random_ball(rng, s, 6, 0.1, 1.2);
      Element y = random_unit_element(rng, s, 6);
      WitnessSet set = hm_witnesses(op, U, y, 64);
      if (set.certificates.empty()) return fail_msg(s, "empty witness set");
      if (s.kind != SpaceKind::bivar_poly &&
          set.bound_mode != BoundMode::analytic)
        return fail_msg(s, "expected an analytic tail bound");
      for (const WitnessCertificate& cert : set.certificates) {
        std::string err = reverify_certificate(s, op, cert, U.center, y);
        if (!err.empty()) return fail_msg(s, err);
      }
    }
  }
  return "";
}

std::string check_zero_witness(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    for (int i = 0; i < 3; ++i) {
      BallSpec U = random_ball(rng, s, 6, 0.1, 1.2);
      WitnessSet set = zero_witness(op, U, 64);
      bool saturated = false;
      for (const WitnessCertificate& cert : set.certificates)
        if (cert.delta == 0.0) saturated = true;
      if (!saturated) return fail_msg(s, "gap never reached exact zero");
    }
  }
  return "";
}

std::string check_transitivity(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    BallSpec U = random_ball(rng, s, 6, 0.2, 1.2);
    BallSpec V = random_ball(rng, s, 6, 0.2, 1.2);
    WitnessCertificate cert = transitivity_witness(op, U, V, 64);
    std::string err = reverify_certificate(s, op, cert, U.center, V.center);
    if (!err.empty()) return fail_msg(s, err);
  }
  return "";
}

std::string check_leading_polynomials(Rng& rng) {
  Space s = Space::hardy();
  for (int i = 0; i < 5; ++i) {
    std::complex<double> alpha(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    if (std::abs(alpha) < 0.1) alpha = {1.0, 0.0};
    BallSpec U = random_ball(rng, s, 6, 0.1, 1.2);
    LeadingPolySet set = leading_polynomials(alpha, U, 64);
    int n = set.first_index;
    for (const TaylorCoeffs& p : set.polynomials) {
      if (p.degree() != n)
        return "p_" + std::to_string(n) + " has degree " +
               std::to_string(p.degree());
      std::complex<double> expect = alpha / factorial(n);
      if (p.coeff(n) != expect)
        return "leading coefficient of p_" + std::to_string(n) + " off";
      if (!U.contains(p)) return "p_" + std::to_string(n) + " escapes the ball";
      ++n;
    }
  }
  bool rejected = false;
  try {
    leading_polynomials({0.0, 0.0}, BallSpec(s, TaylorCoeffs(), 1.0), 8);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  if (!rejected) return "alpha = 0 was not rejected";
  return "";
}

std::string check_periodic_defect(Rng&) {
  for (int period = 1; period <= 4; ++period) {
    double prev = -1.0;
    for (int degree = 20; degree <= 30; degree += 5) {
      PeriodicVector v = periodic_vector_derivative(period, degree);
      double bound = 2.0 * inv_factorial(degree - period + 1);
      if (!(v.defect <= bound))
        return "defect " + format_sig12(v.defect) + " above bound at (" +
               std::to_string(period) + "," + std::to_string(degree) + ")";
      if (prev >= 0.0 && !(v.defect < prev))
        return "defect not decreasing in the degree";
      prev = v.defect;
    }
  }
  return "";
}

std::string check_saturation_index(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    for (int i = 0; i < 5; ++i) {
      Element x = random_element(rng, s, 6);
      int predicted = kernel_saturation_index(op, x);
      if (predicted > 64) return fail_msg(s, "saturation beyond the table");
      std::vector<GkRow> rows = gk_density_table(op, x, predicted);
      if (!rows.back().saturated)
        return fail_msg(s, "gap nonzero at the predicted index");
      if (predicted >= 2 && rows[static_cast<size_t>(predicted) - 2].saturated)
        return fail_msg(s, "gap already zero before the predicted index");
    }
  }
  return "";
}

std::string check_nonzero_kernels(Rng&) {
  for (const Space& s : sweep_spaces()) {
    OperatorConfig op = op_for(s);
    Element k = zero_element(s);
    switch (s.kind) {
      case SpaceKind::hardy: k = TaylorCoeffs::constant(1.0); break;
      case SpaceKind::bivar_poly: k = BivarPoly::monomial(1, 1); break;
      default:
        k = PiecewiseExpPoly::ramp(s.w);  // support [0,1) dies under T^n
        break;
    }
    int n = kernel_saturation_index(op, k);
    if (is_zero_element(s, k, 0.0)) return fail_msg(s, "kernel element is zero");
    if (!is_in_kernel(op, k, n)) return fail_msg(s, "element not in Ker T^n");
  }
  return "";
}

std::string check_serialization_roundtrip(Rng& rng) {
  for (const Space& s : sweep_spaces()) {
    for (int i = 0; i < 5; ++i) {
      Element x = random_element(rng, s);
      json j = element_to_json(s, x);
      json reparsed = json::parse(dump_json(j));
      Element back = element_from_json(reparsed);
      if (!is_zero_element(s, sub(s, back, x), 0.0))
        return fail_msg(s, "element changed across a JSON round-trip");
    }
  }
  // Literal grammar spot checks.
  Space hardy = Space::hardy();
  Element p = parse_element_literal(hardy, "1 + 2*z^3 - i");
  if (as_taylor(p).coeff(3) != std::complex<double>(2.0, 0.0))
    return "polynomial literal misparsed";
  Space lp = Space::translation_lp(2.0, Rational(1), 1.0);
  Element chi = parse_element_literal(lp, "chi(0,3)");
  if (as_piecewise(chi).support_end() != Rational(3))
    return "chi literal misparsed";
  return "";
}

}  // namespace

std::vector<CheckResult> run_verify_suite(std::uint64_t seed) {
  std::vector<Check> checks = {
      {"right_inverse_identity", check_right_inverse},
      {"integration_norm_bound", check_integration_bound},
      {"laplacian_inverse_exact", check_laplacian_inverse},
      {"translation_decay_bound", check_translation_decay},
      {"criterion_table_triangle", check_table_triangle},
      {"hm_witness_soundness", check_hm_witnesses},
      {"zero_witness_saturation", check_zero_witness},
      {"transitivity_witness", check_transitivity},
      {"leading_polynomials_exact", check_leading_polynomials},
      {"periodic_defect_decay", check_periodic_defect},
      {"kernel_saturation_predicted", check_saturation_index},
      {"nonzero_kernel_exhibits", check_nonzero_kernels},
      {"serialization_roundtrip", check_serialization_roundtrip},
  };

  std::vector<CheckResult> results;
  for (size_t i = 0; i < checks.size(); ++i) {
    Rng rng(seed + i);  // independent stream per check
    CheckResult r;
    r.name = checks[i].name;
    try {
      std::string err = checks[i].body(rng);
      r.pass = err.empty();
      r.detail = err.empty() ? "ok" : err;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

std::string format_check_table(const std::vector<CheckResult>& results) {
  size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    for (size_t i = r.name.size(); i < width + 2; ++i) out << ' ';
    out << r.detail << '\n';
  }
  out << (all_passed(results) ? "all checks passed" : "FAILURES present")
      << '\n';
  return out.str();
}

}  // namespace hypermix

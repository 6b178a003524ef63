#include "hypermix/serialization.hpp"

#include "hypermix/numeric.hpp"

#include <complex>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace hypermix {

namespace {

json complex_to_json(std::complex<double> z) {
  return json::array({z.real(), z.imag()});
}

std::complex<double> complex_from_json(const json& j, const char* path) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError(path, "expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Rational rational_field(const json& j, const char* path) {
  try {
    if (j.is_number_integer())
      return Rational(j.get<long long>());
    if (j.is_string())
      return rational_from_string(j.get<std::string>());
  } catch (const std::exception& ex) {
    throw ParseError(path, ex.what());
  }
  throw ParseError(path, "expected an integer or a \"p/q\" string");
}

const json& field(const json& j, const char* key, const char* path) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const char* kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::hardy: return "hardy";
    case SpaceKind::bivar_poly: return "bivar_poly";
    case SpaceKind::translation_lp: return "translation_lp";
    case SpaceKind::translation_c0: return "translation_c0";
  }
  return "?";
}

const char* variant_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::derivative: return "derivative";
    case OperatorKind::laplacian: return "laplacian";
    case OperatorKind::translation_lp: return "translation-lp";
    case OperatorKind::translation_c0: return "translation-c0";
  }
  return "?";
}

json taylor_data(const TaylorCoeffs& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(complex_to_json(c));
  return json{{"coeffs", std::move(coeffs)}};
}

json bivar_data(const BivarPoly& f) {
  json terms = json::array();
  json raw = json::array();
  for (const auto& [key, c] : f.terms()) {
    terms.push_back(json::array({key.first, key.second, c}));
    raw.push_back(json::array(
        {key.first, key.second,
         c * inv_factorial(key.first) * inv_factorial(key.second)}));
  }
  return json{{"terms", std::move(terms)}, {"raw_terms", std::move(raw)}};
}

json piecewise_data(const PiecewiseExpPoly& f) {
  json pieces = json::array();
  for (const auto& piece : f.pieces()) {
    json terms = json::array();
    for (const auto& t : piece.terms) {
      terms.push_back(json{{"c", t.c},
                           {"d", t.d},
                           {"q", to_string(t.q)},
                           {"e", to_string(t.e)}});
    }
    pieces.push_back(json{{"lo", to_string(piece.lo)},
                          {"hi", to_string(piece.hi)},
                          {"terms", std::move(terms)}});
  }
  return json{{"pieces", std::move(pieces)},
              {"continuous", f.is_continuous()}};
}

const char* bound_mode_name(BoundMode m) {
  return m == BoundMode::analytic ? "analytic" : "tested_range";
}

}  // namespace

json space_to_json(const Space& s) {
  json j{{"kind", kind_name(s.kind)}};
  if (s.kind == SpaceKind::translation_lp || s.kind == SpaceKind::translation_c0) {
    j["w"] = s.w;
    j["a"] = to_string(s.a);
  }
  if (s.kind == SpaceKind::translation_lp) j["p"] = s.p;
  return j;
}

Space space_from_json(const json& j) {
  std::string kind = field(j, "kind", "space").get<std::string>();
  if (kind == "hardy") return Space::hardy();
  if (kind == "bivar_poly") return Space::bivar_poly();
  if (kind == "translation_lp") {
    return Space::translation_lp(field(j, "w", "space").get<double>(),
                                 rational_field(field(j, "a", "space"), "space.a"),
                                 field(j, "p", "space").get<double>());
  }
  if (kind == "translation_c0") {
    return Space::translation_c0(field(j, "w", "space").get<double>(),
                                 rational_field(field(j, "a", "space"), "space.a"));
  }
  throw ParseError("space.kind", "unknown kind \"" + kind + "\"");
}

json element_to_json(const Space& s, const Element& x) {
  check_element(s, x);
  json data;
  switch (s.kind) {
    case SpaceKind::hardy:
      data = taylor_data(as_taylor(x));
      break;
    case SpaceKind::bivar_poly:
      data = bivar_data(as_bivar(x));
      break;
    case SpaceKind::translation_lp:
    case SpaceKind::translation_c0:
      data = piecewise_data(as_piecewise(x));
      break;
  }
  return json{{"space", space_to_json(s)}, {"data", std::move(data)}};
}

Element element_from_json(const json& j, Space* space_out) {
  Space s = space_from_json(field(j, "space", "element"));
  if (space_out) *space_out = s;
  const json& data = field(j, "data", "element");

  switch (s.kind) {
    case SpaceKind::hardy: {
      const json& arr = field(data, "coeffs", "element.data");
      if (!arr.is_array()) throw ParseError("element.data.coeffs", "expected an array");
      std::vector<std::complex<double>> coeffs;
      for (const auto& c : arr)
        coeffs.push_back(complex_from_json(c, "element.data.coeffs[]"));
      return TaylorCoeffs(std::move(coeffs));
    }
    case SpaceKind::bivar_poly: {
      const json& arr = field(data, "terms", "element.data");
      if (!arr.is_array()) throw ParseError("element.data.terms", "expected an array");
      std::map<BivarPoly::Key, double> terms;
      for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3)
          throw ParseError("element.data.terms[]", "expected [n, l, c]");
        int n = t[0].get<int>();
        int l = t[1].get<int>();
        if (n < 0 || l < 0)
          throw ParseError("element.data.terms[]", "degrees must be nonnegative");
        terms[{n, l}] += t[2].get<double>();
      }
      return BivarPoly(std::move(terms));
    }
    case SpaceKind::translation_lp:
    case SpaceKind::translation_c0: {
      const json& arr = field(data, "pieces", "element.data");
      if (!arr.is_array()) throw ParseError("element.data.pieces", "expected an array");
      std::vector<Piece> pieces;
      for (const auto& pj : arr) {
        Piece piece;
        piece.lo = rational_field(field(pj, "lo", "element.data.pieces[]"),
                                  "element.data.pieces[].lo");
        piece.hi = rational_field(field(pj, "hi", "element.data.pieces[]"),
                                  "element.data.pieces[].hi");
        const json& terms = field(pj, "terms", "element.data.pieces[]");
        if (!terms.is_array())
          throw ParseError("element.data.pieces[].terms", "expected an array");
        for (const auto& tj : terms) {
          ExpPolyTerm term;
          term.c = field(tj, "c", "element.data..terms[]").get<double>();
          term.d = field(tj, "d", "element.data..terms[]").get<int>();
          if (term.d < 0)
            throw ParseError("element.data..terms[].d", "degree must be nonnegative");
          term.q = rational_field(field(tj, "q", "element.data..terms[]"),
                                  "element.data..terms[].q");
          term.e = rational_field(field(tj, "e", "element.data..terms[]"),
                                  "element.data..terms[].e");
          piece.terms.push_back(std::move(term));
        }
        pieces.push_back(std::move(piece));
      }
      try {
        return PiecewiseExpPoly(s.w, std::move(pieces));
      } catch (const std::invalid_argument& ex) {
        throw ParseError("element.data.pieces", ex.what());
      }
    }
  }
  throw ParseError("element.space", "unknown kind");
}

json ball_to_json(const BallSpec& b) {
  return json{{"center", element_to_json(b.space, b.center)},
              {"radius", round_sig12(b.radius)}};
}

BallSpec ball_from_json(const json& j) {
  Space s;
  Element center = element_from_json(field(j, "center", "ball"), &s);
  double radius = field(j, "radius", "ball").get<double>();
  if (!(radius > 0.0)) throw ParseError("ball.radius", "radius must be positive");
  return BallSpec(s, std::move(center), radius);
}

json op_to_json(const OperatorConfig& op) {
  json j{{"variant", variant_name(op.kind)}};
  if (op.kind == OperatorKind::translation_lp ||
      op.kind == OperatorKind::translation_c0) {
    j["w"] = op.w;
    j["a"] = to_string(op.a);
  }
  if (op.kind == OperatorKind::translation_lp) j["p"] = op.p;
  return j;
}

OperatorConfig op_from_json(const json& j) {
  std::string variant = field(j, "variant", "op").get<std::string>();
  try {
    if (variant == "derivative") return OperatorConfig::derivative();
    if (variant == "laplacian") return OperatorConfig::laplacian();
    if (variant == "translation-lp") {
      return OperatorConfig::translation_lp(
          field(j, "w", "op").get<double>(),
          rational_field(field(j, "a", "op"), "op.a"),
          field(j, "p", "op").get<double>());
    }
    if (variant == "translation-c0") {
      return OperatorConfig::translation_c0(
          field(j, "w", "op").get<double>(),
          rational_field(field(j, "a", "op"), "op.a"));
    }
  } catch (const std::invalid_argument& ex) {
    throw ParseError("op", ex.what());
  }
  throw ParseError("op.variant", "unknown variant \"" + variant + "\"");
}

json certificate_to_json(const WitnessCertificate& c) {
  return json{{"op", op_to_json(c.op)},
              {"n", c.n},
              {"u_n", element_to_json(c.op.space(), c.u_n)},
              {"residual", round_sig12(c.residual)},
              {"delta", round_sig12(c.delta)},
              {"radius", round_sig12(c.radius)},
              {"inside", c.inside},
              {"bound_mode", bound_mode_name(c.bound_mode)}};
}

json witness_set_to_json(const WitnessSet& s) {
  json certs = json::array();
  for (const auto& c : s.certificates) certs.push_back(certificate_to_json(c));
  return json{{"first_index", s.first_index},
              {"bound_mode", bound_mode_name(s.bound_mode)},
              {"certificates", std::move(certs)}};
}

json leading_set_to_json(const LeadingPolySet& s) {
  const Space hardy = Space::hardy();
  json polys = json::array();
  for (const auto& p : s.polynomials)
    polys.push_back(element_to_json(hardy, p));
  return json{{"first_index", s.first_index},
              {"bound_mode", bound_mode_name(s.bound_mode)},
              {"alpha", complex_to_json(s.alpha)},
              {"polynomials", std::move(polys)}};
}

json periodic_to_json(const PeriodicVector& v, int period, int degree,
                      int root_index) {
  return json{{"period", period},
              {"degree", degree},
              {"root_index", root_index},
              {"lambda", complex_to_json(v.lambda)},
              {"defect", round_sig12(v.defect)},
              {"f", element_to_json(Space::hardy(), v.f)}};
}

json no_witness_to_json(const NoWitnessInRange& err) {
  json deltas = json::array();
  for (const auto& [n, d] : err.deltas)
    deltas.push_back(json::array({n, round_sig12(d)}));
  return json{{"error", "NO_WITNESS_IN_RANGE"},
              {"message", err.what()},
              {"deltas", std::move(deltas)}};
}

std::string decay_table_csv(const DecayTable& t) {
  std::ostringstream out;
  out << "n,s_norm,kernel_gap,combined\n";
  for (const auto& row : t.rows) {
    out << row.n << ',' << format_sig12(row.s_norm) << ','
        << format_sig12(row.kernel_gap) << ',' << format_sig12(row.combined)
        << '\n';
  }
  return out.str();
}

std::string gk_table_csv(const std::vector<GkRow>& rows) {
  std::ostringstream out;
  out << "n,gap,saturated\n";
  for (const auto& row : rows) {
    out << row.n << ',' << format_sig12(row.gap) << ','
        << (row.saturated ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hypermix

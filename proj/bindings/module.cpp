#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypermix/dynamics.hpp"
#include "hypermix/errors.hpp"
#include "hypermix/kernels.hpp"
#include "hypermix/parse.hpp"
#include "hypermix/serialization.hpp"
#include "hypermix/verify.hpp"

#include <complex>
#include <sstream>
#include <string>
#include <vector>

namespace py = pybind11;

namespace hypermix {
namespace bindings {

// Rational parameters cross the boundary as strings ("1/2", "3", "0.25") so
// python callers never touch floating approximations of exact data.
Rational rat(const std::string& text) { return rational_from_string(text); }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string describe(const Space& s) {
  switch (s.kind) {
    case SpaceKind::hardy: return "hardy";
    case SpaceKind::bivar_poly: return "bivar-poly";
    case SpaceKind::translation_lp: {
      std::ostringstream out;
      out << "translation-lp(w=" << s.w << ", a=" << to_string(s.a)
          << ", p=" << s.p << ")";
      return out.str();
    }
    case SpaceKind::translation_c0: {
      std::ostringstream out;
      out << "translation-c0(w=" << s.w << ", a=" << to_string(s.a) << ")";
      return out.str();
    }
  }
  return "?";
}

}  // namespace bindings
}  // namespace hypermix

PYBIND11_MODULE(_core, m) {
  using namespace hypermix;
  using hypermix::bindings::describe;
  using hypermix::bindings::parse_json_text;
  using hypermix::bindings::rat;

  m.doc() = "operator dynamics engine: four operator families with right "
            "inverses and checkable witness certificates";

  // Exception classes live as long as the interpreter; the released handles
  // keep them reachable from the translator below.
  static py::handle no_witness_type =
      py::exception<NoWitnessInRange>(m, "NoWitnessInRange").release();
  static py::handle capacity_type =
      py::exception<CapacityError>(m, "CapacityError").release();
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SpaceMismatchError>(m, "SpaceMismatchError",
                                             PyExc_ValueError);

  // Manual translation so the structured payloads survive: a failed witness
  // search keeps its (n, delta) profile, a capacity overflow keeps the last
  // iteration count that completed.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NoWitnessInRange& e) {
      py::list rows;
      for (const auto& [n, delta] : e.deltas)
        rows.append(py::make_tuple(n, delta));
      py::object exc = py::reinterpret_borrow<py::object>(no_witness_type)(e.what());
      exc.attr("deltas") = rows;
      PyErr_SetObject(no_witness_type.ptr(), exc.ptr());
    } catch (const CapacityError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(capacity_type)(e.what());
      exc.attr("max_safe_k") = e.max_safe_k;
      PyErr_SetObject(capacity_type.ptr(), exc.ptr());
    }
  });

  py::enum_<SpaceKind>(m, "SpaceKind")
      .value("hardy", SpaceKind::hardy)
      .value("bivar_poly", SpaceKind::bivar_poly)
      .value("translation_lp", SpaceKind::translation_lp)
      .value("translation_c0", SpaceKind::translation_c0);

  py::enum_<OperatorKind>(m, "OperatorKind")
      .value("derivative", OperatorKind::derivative)
      .value("laplacian", OperatorKind::laplacian)
      .value("translation_lp", OperatorKind::translation_lp)
      .value("translation_c0", OperatorKind::translation_c0);

  py::enum_<BoundMode>(m, "BoundMode")
      .value("tested_range", BoundMode::tested_range)
      .value("analytic", BoundMode::analytic);

  py::class_<Space>(m, "Space")
      .def_static("hardy", &Space::hardy)
      .def_static("bivar_poly", &Space::bivar_poly)
      .def_static(
          "translation_lp",
          [](double w, const std::string& a, double p) {
            return Space::translation_lp(w, rat(a), p);
          },
          py::arg("w"), py::arg("a"), py::arg("p"))
      .def_static(
          "translation_c0",
          [](double w, const std::string& a) {
            return Space::translation_c0(w, rat(a));
          },
          py::arg("w"), py::arg("a"))
      .def_readonly("kind", &Space::kind)
      .def_readonly("w", &Space::w)
      .def_readonly("p", &Space::p)
      .def_property_readonly("a",
                             [](const Space& s) { return to_string(s.a); })
      .def("__eq__",
           [](const Space& a, const Space& b) { return a == b; },
           py::is_operator())
      .def("__repr__",
           [](const Space& s) { return "Space(" + describe(s) + ")"; });

  py::class_<OperatorConfig>(m, "OperatorConfig")
      .def_static("derivative", &OperatorConfig::derivative)
      .def_static("laplacian", &OperatorConfig::laplacian)
      .def_static(
          "translation_lp",
          [](double w, const std::string& a, double p) {
            return OperatorConfig::translation_lp(w, rat(a), p);
          },
          py::arg("w"), py::arg("a"), py::arg("p"))
      .def_static(
          "translation_c0",
          [](double w, const std::string& a) {
            return OperatorConfig::translation_c0(w, rat(a));
          },
          py::arg("w"), py::arg("a"))
      .def_readonly("kind", &OperatorConfig::kind)
      .def_readonly("w", &OperatorConfig::w)
      .def_readonly("p", &OperatorConfig::p)
      .def_property_readonly(
          "a", [](const OperatorConfig& o) { return to_string(o.a); })
      .def("space", &OperatorConfig::space)
      .def("__eq__",
           [](const OperatorConfig& a, const OperatorConfig& b) {
             return a == b;
           },
           py::is_operator())
      .def("__repr__", [](const OperatorConfig& o) {
        return "OperatorConfig(" + describe(o.space()) + ")";
      });

  py::class_<TaylorCoeffs>(m, "TaylorCoeffs")
      .def(py::init<std::vector<std::complex<double>>>(), py::arg("coeffs"))
      .def_static("monomial", &TaylorCoeffs::monomial, py::arg("degree"),
                  py::arg("c") = std::complex<double>(1.0, 0.0))
      .def_static("constant", &TaylorCoeffs::constant, py::arg("c"))
      .def_property_readonly("coeffs", &TaylorCoeffs::coeffs)
      .def("degree", &TaylorCoeffs::degree)
      .def("coeff", &TaylorCoeffs::coeff, py::arg("k"))
      .def("norm", &TaylorCoeffs::norm)
      .def("__repr__", [](const TaylorCoeffs& f) {
        std::ostringstream out;
        out << "TaylorCoeffs(degree=" << f.degree() << ", norm=" << f.norm()
            << ")";
        return out.str();
      });

  py::class_<BivarPoly>(m, "BivarPoly")
      .def(py::init<std::map<BivarPoly::Key, double>>(), py::arg("terms"))
      .def_static("monomial", &BivarPoly::monomial, py::arg("n"), py::arg("l"),
                  py::arg("c") = 1.0)
      .def_property_readonly("terms", &BivarPoly::terms)
      .def("total_degree", &BivarPoly::total_degree)
      .def("norm", &BivarPoly::norm)
      .def("__repr__", [](const BivarPoly& f) {
        std::ostringstream out;
        out << "BivarPoly(total_degree=" << f.total_degree()
            << ", terms=" << f.terms().size() << ")";
        return out.str();
      });

  py::class_<PiecewiseExpPoly>(m, "PiecewiseExpPoly")
      .def_static(
          "zero", [](double base) { return PiecewiseExpPoly::zero(base); },
          py::arg("base"))
      .def_static(
          "indicator",
          [](double base, const std::string& lo, const std::string& hi) {
            return PiecewiseExpPoly::indicator(base, rat(lo), rat(hi));
          },
          py::arg("base"), py::arg("lo"), py::arg("hi"))
      .def_static(
          "ramp", [](double base) { return PiecewiseExpPoly::ramp(base); },
          py::arg("base"))
      .def_property_readonly("base", &PiecewiseExpPoly::base)
      .def("eval", &PiecewiseExpPoly::eval, py::arg("t"))
      .def("is_continuous", &PiecewiseExpPoly::is_continuous)
      .def_property_readonly(
          "support_end",
          [](const PiecewiseExpPoly& f) { return to_string(f.support_end()); })
      .def_property_readonly("support_start",
                             [](const PiecewiseExpPoly& f) {
                               return to_string(f.support_start());
                             })
      .def("__repr__", [](const PiecewiseExpPoly& f) {
        std::ostringstream out;
        out << "PiecewiseExpPoly(base=" << f.base()
            << ", pieces=" << f.pieces().size() << ", support_end="
            << to_string(f.support_end()) << ")";
        return out.str();
      });

  py::class_<BallSpec>(m, "BallSpec")
      .def(py::init<Space, Element, double>(), py::arg("space"),
           py::arg("center"), py::arg("radius"))
      .def_readonly("space", &BallSpec::space)
      .def_readonly("center", &BallSpec::center)
      .def_readonly("radius", &BallSpec::radius)
      .def("contains", &BallSpec::contains, py::arg("x"));

  // Space operations. Elements are one of the three classes above; the
  // space argument decides which family is legal and supplies the norm.
  m.def("norm", static_cast<double (*)(const Space&, const Element&)>(&norm),
        py::arg("space"), py::arg("x"));
  m.def("distance",
        static_cast<double (*)(const Space&, const Element&, const Element&)>(
            &distance),
        py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("add", &add, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("sub", &sub, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("scale", &scale, py::arg("space"), py::arg("alpha"), py::arg("x"));
  m.def("zero_element", &zero_element, py::arg("space"));
  m.def("is_zero_element", &is_zero_element, py::arg("space"), py::arg("x"),
        py::arg("tol") = 0.0);
  m.def("check_element", &check_element, py::arg("space"), py::arg("x"));

  m.def("parse_element_literal", &parse_element_literal, py::arg("space"),
        py::arg("text"));
  m.def("parse_complex_literal", &parse_complex_literal, py::arg("text"));

  m.def("apply_T", &apply_T, py::arg("op"), py::arg("x"));
  m.def("apply_S", &apply_S, py::arg("op"), py::arg("x"));
  m.def(
      "iterate",
      [](const OperatorConfig& op, int k, const Element& x, bool use_S) {
        return iterate(op, k, x, use_S).value;
      },
      py::arg("op"), py::arg("k"), py::arg("x"), py::arg("use_S") = false);

  py::class_<KernelProjection>(m, "KernelProjection")
      .def_readonly("n", &KernelProjection::n)
      .def_readonly("w_n", &KernelProjection::w_n)
      .def_readonly("gap", &KernelProjection::gap);

  py::class_<GkRow>(m, "GkRow")
      .def_readonly("n", &GkRow::n)
      .def_readonly("gap", &GkRow::gap)
      .def_readonly("saturated", &GkRow::saturated);

  m.def("kernel_project", &kernel_project, py::arg("op"), py::arg("x"),
        py::arg("n"));
  m.def("is_in_kernel", &is_in_kernel, py::arg("op"), py::arg("f"),
        py::arg("n"), py::arg("tol") = 1e-12);
  m.def("gk_density_table", &gk_density_table, py::arg("op"), py::arg("x"),
        py::arg("n_max"));
  m.def("kernel_saturation_index", &kernel_saturation_index, py::arg("op"),
        py::arg("x"));

  py::class_<WitnessCertificate>(m, "WitnessCertificate")
      .def_readonly("op", &WitnessCertificate::op)
      .def_readonly("n", &WitnessCertificate::n)
      .def_readonly("u_n", &WitnessCertificate::u_n)
      .def_readonly("residual", &WitnessCertificate::residual)
      .def_readonly("delta", &WitnessCertificate::delta)
      .def_readonly("radius", &WitnessCertificate::radius)
      .def_readonly("inside", &WitnessCertificate::inside)
      .def_readonly("bound_mode", &WitnessCertificate::bound_mode)
      .def("json",
           [](const WitnessCertificate& c) {
             return dump_json(certificate_to_json(c));
           })
      .def("__repr__", [](const WitnessCertificate& c) {
        std::ostringstream out;
        out << "WitnessCertificate(n=" << c.n << ", delta=" << c.delta
            << ", residual=" << c.residual << ")";
        return out.str();
      });

  py::class_<DecayRow>(m, "DecayRow")
      .def_readonly("n", &DecayRow::n)
      .def_readonly("s_norm", &DecayRow::s_norm)
      .def_readonly("kernel_gap", &DecayRow::kernel_gap)
      .def_readonly("combined", &DecayRow::combined);

  py::class_<DecayTable>(m, "DecayTable")
      .def_readonly("rows", &DecayTable::rows)
      .def_readonly("pass_", &DecayTable::pass)
      .def_readonly("tolerance", &DecayTable::tolerance)
      .def("csv", [](const DecayTable& t) { return decay_table_csv(t); });

  py::class_<WitnessSet>(m, "WitnessSet")
      .def_readonly("first_index", &WitnessSet::first_index)
      .def_readonly("bound_mode", &WitnessSet::bound_mode)
      .def_readonly("certificates", &WitnessSet::certificates)
      .def("json",
           [](const WitnessSet& s) { return dump_json(witness_set_to_json(s)); })
      .def("__repr__", [](const WitnessSet& s) {
        std::ostringstream out;
        out << "WitnessSet(first_index=" << s.first_index
            << ", certificates=" << s.certificates.size() << ")";
        return out.str();
      });

  py::class_<LeadingPolySet>(m, "LeadingPolySet")
      .def_readonly("first_index", &LeadingPolySet::first_index)
      .def_readonly("bound_mode", &LeadingPolySet::bound_mode)
      .def_readonly("polynomials", &LeadingPolySet::polynomials)
      .def_readonly("alpha", &LeadingPolySet::alpha)
      .def("json", [](const LeadingPolySet& s) {
        return dump_json(leading_set_to_json(s));
      });

  py::class_<PeriodicVector>(m, "PeriodicVector")
      .def_readonly("f", &PeriodicVector::f)
      .def_readonly("lam", &PeriodicVector::lambda)
      .def_readonly("defect", &PeriodicVector::defect);

  m.def("hm_criterion_table", &hm_criterion_table, py::arg("op"), py::arg("x"),
        py::arg("y"), py::arg("n_max"), py::arg("tolerance") = 1e-10);
  m.def("hm_witnesses", &hm_witnesses, py::arg("op"), py::arg("ball"),
        py::arg("y"), py::arg("n_max") = 64, py::arg("tolerance") = 1e-10);
  m.def("stt_witness", &stt_witness, py::arg("op"), py::arg("ball"),
        py::arg("y"), py::arg("n_max") = 64, py::arg("tolerance") = 1e-10);
  m.def("zero_witness", &zero_witness, py::arg("op"), py::arg("ball"),
        py::arg("n_max") = 64, py::arg("tolerance") = 1e-10);
  m.def("transitivity_witness", &transitivity_witness, py::arg("op"),
        py::arg("U"), py::arg("V"), py::arg("n_max") = 64,
        py::arg("tolerance") = 1e-10);
  m.def("leading_polynomials", &leading_polynomials, py::arg("alpha"),
        py::arg("ball"), py::arg("n_max") = 64);
  m.def("periodic_vector_derivative", &periodic_vector_derivative,
        py::arg("period"), py::arg("degree"), py::arg("root_index") = 1);
  m.def(
      "periodic_json",
      [](const PeriodicVector& v, int period, int degree, int root_index) {
        return dump_json(periodic_to_json(v, period, degree, root_index));
      },
      py::arg("v"), py::arg("period"), py::arg("degree"),
      py::arg("root_index") = 1);

  // JSON bridge. Canonical text: sorted keys, 2-space indent, trailing
  // newline, identical to what the command line tool emits.
  m.def("element_json",
        [](const Space& s, const Element& x) {
          return dump_json(element_to_json(s, x));
        },
        py::arg("space"), py::arg("x"));
  m.def(
      "element_from_json",
      [](const std::string& text) {
        Space s;
        Element x = element_from_json(parse_json_text(text), &s);
        return py::make_tuple(s, x);
      },
      py::arg("text"), "Returns the (space, element) pair.");
  m.def("ball_json",
        [](const BallSpec& b) { return dump_json(ball_to_json(b)); },
        py::arg("ball"));
  m.def("ball_from_json",
        [](const std::string& text) { return ball_from_json(parse_json_text(text)); },
        py::arg("text"));
  m.def("op_json", [](const OperatorConfig& op) { return dump_json(op_to_json(op)); },
        py::arg("op"));
  m.def("op_from_json",
        [](const std::string& text) { return op_from_json(parse_json_text(text)); },
        py::arg("text"));
  m.def("gk_table_csv", &gk_table_csv, py::arg("rows"));

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail);

  m.def("run_verify_suite", &run_verify_suite,
        py::arg("seed") = std::uint64_t{20260817});
  m.def("format_check_table", &format_check_table, py::arg("results"));
  m.def("all_passed", &all_passed, py::arg("results"));
}

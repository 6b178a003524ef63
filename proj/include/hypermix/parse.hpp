#pragma once

#include "hypermix/spaces.hpp"

#include <complex>
#include <string>

namespace hypermix {

/// Hand-writable element literals, one small grammar per space:
///   Hardy:        "0", "1 + 2*z^3", "(0,1)i-free form: 2i*z^2 - i"
///   bivar:        "X(2)Y(2)", "3*X(1)Y(0) - X(0)Y(4)", constants
///   translations: "chi(lo,hi)" (lo, hi rational or decimal), "ramp",
///                 sums with real scale factors, "0"
/// Throws ParseError with a position diagnostic.
Element parse_element_literal(const Space& space, const std::string& text);

/// Complex scalar in the same notation as Hardy coefficients: "2", "-1.5i",
/// "1+2i".
std::complex<double> parse_complex_literal(const std::string& text);

}  // namespace hypermix

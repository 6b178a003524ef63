#pragma once

#include <boost/rational.hpp>

#include <string>
#include <string_view>

namespace hypermix {

// Exact rational scalar for breakpoints and exponents. long long components
// are ample: the operators only ever add/subtract multiples of the step a,
// so denominators stay bounded by the input denominators.
using Rational = boost::rational<long long>;

/// Render as "p/q" with q >= 1 (the serialized form).
std::string to_string(const Rational& r);

/// Accepts "p/q", plain integers, and finite decimals such as "0.25".
Rational rational_from_string(std::string_view text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

inline Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Least integer n with n >= r.
long long rat_ceil(const Rational& r);

}  // namespace hypermix

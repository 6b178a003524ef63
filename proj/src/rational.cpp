#include "hypermix/rational.hpp"

#include "hypermix/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace hypermix {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

long long parse_ll(std::string_view s, const char* what) {
  if (s.empty()) throw ParseError(std::string("empty ") + what);
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw ParseError(std::string("bare sign in ") + what);
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(std::string("invalid digit in ") + what + ": '" +
                       std::string(s) + "'");
    if (v > (0x7fffffffffffffffLL - 9) / 10)
      throw ParseError(std::string(what) + " out of range: '" + std::string(s) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  // strip surrounding blanks
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    long long num = parse_ll(text.substr(0, slash), "numerator");
    long long den = parse_ll(text.substr(slash + 1), "denominator");
    if (den == 0) throw ParseError("zero denominator in rational literal");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 12)
      throw ParseError("decimal literal has more than 12 fractional digits: '" +
                       std::string(text) + "'");
    std::string digits = std::string(text.substr(0, dot)) + std::string(frac);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    // "-0.5" must keep its sign even when the integer part is zero
    long long num = parse_ll(digits, "decimal literal");
    if (num == 0 && !digits.empty() && (digits[0] == '-')) return Rational(0);
    return Rational(num, den);
  }
  return Rational(parse_ll(text, "rational literal"));
}

long long rat_ceil(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() > 0 && r.numerator() % r.denominator() != 0) ++q;
  return q;
}

}  // namespace hypermix

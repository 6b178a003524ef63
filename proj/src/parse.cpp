#include "hypermix/parse.hpp"

#include "hypermix/errors.hpp"
#include "hypermix/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hypermix {

namespace {

// Cursor over the literal text. All grammars share the same scanning
// primitives; errors carry the offset so CLI users can spot the typo.
struct Cursor {
  const std::string& text;
  size_t pos = 0;

  explicit Cursor(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos) + " in \"" +
                     text + "\"");
  }

  bool at_number() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  // Unsigned decimal; sign handling lives with the callers so that the
  // additive grammar owns '+'/'-'.
  double number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
      ++pos;
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      size_t mark = pos++;
      if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          ++pos;
      } else {
        pos = mark;  // trailing 'e' belongs to something else
      }
    }
    if (pos == start) fail("expected a number");
    std::string tok = text.substr(start, pos - start);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size()) fail("bad number \"" + tok + "\"");
    return v;
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return std::atoi(text.substr(start, pos - start).c_str());
  }

  // Rational endpoint: "p/q", integer, or finite decimal, optionally signed.
  Rational rational() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '.' || text[pos] == '/'))
      ++pos;
    if (pos == start) fail("expected a rational");
    try {
      return rational_from_string(text.substr(start, pos - start));
    } catch (const std::exception& ex) {
      fail(ex.what());
    }
  }

  bool accept_word(const char* w) {
    skip_ws();
    size_t n = std::string(w).size();
    if (text.compare(pos, n, w) != 0) return false;
    size_t after = pos + n;
    if (after < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
      return false;
    pos = after;
    return true;
  }
};

// Hardy terms: products of numbers, 'i', and z^k. "2i*z^3" and "z" both work.
std::pair<std::complex<double>, int> hardy_term(Cursor& cur) {
  std::complex<double> coeff(1.0, 0.0);
  int power = 0;
  bool saw_factor = false;
  for (;;) {
    if (cur.at_number()) {
      double v = cur.number();
      if (cur.accept('i'))
        coeff *= std::complex<double>(0.0, v);
      else
        coeff *= v;
      saw_factor = true;
    } else if (cur.accept_word("i")) {
      coeff *= std::complex<double>(0.0, 1.0);
      saw_factor = true;
    } else if (cur.accept_word("z")) {
      int k = 1;
      if (cur.accept('^')) k = cur.integer();
      power += k;
      saw_factor = true;
    } else {
      break;
    }
    cur.accept('*');  // '*' between factors is optional: "2*z^3" or "2z^3"
  }
  if (!saw_factor) cur.fail("expected a term");
  return {coeff, power};
}

Element parse_hardy(const std::string& text) {
  Cursor cur(text);
  std::vector<std::complex<double>> coeffs;
  bool first = true;
  while (!cur.done()) {
    double sign = 1.0;
    if (cur.accept('-'))
      sign = -1.0;
    else if (!cur.accept('+') && !first)
      cur.fail("expected '+' or '-' between terms");
    auto [c, k] = hardy_term(cur);
    if (coeffs.size() < static_cast<size_t>(k) + 1)
      coeffs.resize(static_cast<size_t>(k) + 1);
    coeffs[static_cast<size_t>(k)] += sign * c;
    first = false;
  }
  if (first) cur.fail("empty literal");
  return TaylorCoeffs(std::move(coeffs));
}

Element parse_bivar(const std::string& text) {
  Cursor cur(text);
  BivarPoly out;
  bool first = true;
  while (!cur.done()) {
    double sign = 1.0;
    if (cur.accept('-'))
      sign = -1.0;
    else if (!cur.accept('+') && !first)
      cur.fail("expected '+' or '-' between terms");
    double coeff = 1.0;
    bool have_coeff = false;
    if (cur.at_number()) {
      coeff = cur.number();
      have_coeff = true;
      cur.accept('*');
    }
    int n = 0, l = 0;
    if (cur.accept_word("X")) {
      cur.expect('(', "X degree");
      n = cur.integer();
      cur.expect(')', "X degree");
      if (!cur.accept_word("Y")) cur.fail("expected Y(l) after X(n)");
      cur.expect('(', "Y degree");
      l = cur.integer();
      cur.expect(')', "Y degree");
    } else if (!have_coeff) {
      cur.fail("expected a coefficient or X(n)Y(l)");
    }
    out = out + BivarPoly::monomial(n, l, sign * coeff);
    first = false;
  }
  if (first) cur.fail("empty literal");
  return out;
}

Element parse_piecewise(const Space& space, const std::string& text) {
  Cursor cur(text);
  PiecewiseExpPoly out = PiecewiseExpPoly::zero(space.w);
  bool first = true;
  while (!cur.done()) {
    double sign = 1.0;
    if (cur.accept('-'))
      sign = -1.0;
    else if (!cur.accept('+') && !first)
      cur.fail("expected '+' or '-' between terms");
    double coeff = 1.0;
    bool have_coeff = false;
    if (cur.at_number()) {
      coeff = cur.number();
      have_coeff = true;
      cur.accept('*');
      char next = cur.peek();
      if (next != 'c' && next != 'r') {
        // A bare number only works as the zero element.
        if (coeff == 0.0) {
          first = false;
          continue;
        }
        cur.fail("constants have unbounded support; use chi(lo,hi) or ramp");
      }
    }
    PiecewiseExpPoly atom = PiecewiseExpPoly::zero(space.w);
    if (cur.accept_word("chi")) {
      cur.expect('(', "chi endpoints");
      Rational lo = cur.rational();
      cur.expect(',', "chi endpoints");
      Rational hi = cur.rational();
      cur.expect(')', "chi endpoints");
      try {
        atom = PiecewiseExpPoly::indicator(space.w, lo, hi);
      } catch (const std::invalid_argument& ex) {
        cur.fail(ex.what());
      }
    } else if (cur.accept_word("ramp")) {
      atom = PiecewiseExpPoly::ramp(space.w);
    } else {
      cur.fail(have_coeff ? "expected chi(lo,hi) or ramp after coefficient"
                          : "expected chi(lo,hi), ramp, or 0");
    }
    out = pw_add(out, pw_scale(sign * coeff, atom));
    first = false;
  }
  if (first) cur.fail("empty literal");
  return out;
}

}  // namespace

Element parse_element_literal(const Space& space, const std::string& text) {
  switch (space.kind) {
    case SpaceKind::hardy:
      return parse_hardy(text);
    case SpaceKind::bivar_poly:
      return parse_bivar(text);
    case SpaceKind::translation_lp:
    case SpaceKind::translation_c0:
      return parse_piecewise(space, text);
  }
  throw ParseError("unknown space kind");
}

std::complex<double> parse_complex_literal(const std::string& text) {
  Element e = parse_hardy(text);
  const TaylorCoeffs& t = as_taylor(e);
  if (t.degree() > 0)
    throw ParseError("expected a scalar, got a polynomial: \"" + text + "\"");
  return t.coeff(0);
}

}  // namespace hypermix

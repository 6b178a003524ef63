#include "hypermix/operators.hpp"

#include "hypermix/errors.hpp"

#include <cmath>
#include <string>

namespace hypermix {

OperatorConfig OperatorConfig::translation_lp(double w, const Rational& a, double p) {
  Space s = Space::translation_lp(w, a, p);  // validates parameters
  return {OperatorKind::translation_lp, s.w, s.a, s.p};
}

OperatorConfig OperatorConfig::translation_c0(double w, const Rational& a) {
  Space s = Space::translation_c0(w, a);
  return {OperatorKind::translation_c0, s.w, s.a, 0.0};
}

Space OperatorConfig::space() const {
  switch (kind) {
    case OperatorKind::derivative:
      return Space::hardy();
    case OperatorKind::laplacian:
      return Space::bivar_poly();
    case OperatorKind::translation_lp:
      return Space::translation_lp(w, a, p);
    case OperatorKind::translation_c0:
      return Space::translation_c0(w, a);
  }
  return Space::hardy();
}

bool OperatorConfig::operator==(const OperatorConfig& o) const {
  return kind == o.kind && space() == o.space();
}

namespace {

TaylorCoeffs differentiate(const TaylorCoeffs& f) {
  const auto& c = f.coeffs();
  if (c.size() <= 1) return TaylorCoeffs();
  std::vector<TaylorCoeffs::Coeff> out(c.size() - 1);
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    out[k] = static_cast<double>(k + 1) * c[k + 1];
  return TaylorCoeffs(std::move(out));
}

TaylorCoeffs integrate_from_zero(const TaylorCoeffs& f) {
  const auto& c = f.coeffs();
  if (c.empty()) return TaylorCoeffs();
  std::vector<TaylorCoeffs::Coeff> out(c.size() + 1, TaylorCoeffs::Coeff(0.0));
  for (std::size_t k = 0; k < c.size(); ++k)
    out[k + 1] = c[k] / static_cast<double>(k + 1);
  return TaylorCoeffs(std::move(out));
}

BivarPoly laplacian_fwd(const BivarPoly& f) {
  std::map<BivarPoly::Key, double> out;
  for (const auto& [k, c] : f.terms()) {
    if (k.first >= 2) out[{k.first - 2, k.second}] += c;
    if (k.second >= 2) out[{k.first, k.second - 2}] += c;
  }
  return BivarPoly(std::move(out));
}

// X_n Y_l -> sum_{j=0}^{floor(n/2)} (-1)^j X_{n-2j} Y_{l+2j+2}; applying the
// forward map telescopes the series back to X_n Y_l exactly.
BivarPoly laplacian_inv(const BivarPoly& f) {
  std::map<BivarPoly::Key, double> out;
  for (const auto& [k, c] : f.terms()) {
    double sign = 1.0;
    for (int j = 0; 2 * j <= k.first; ++j) {
      out[{k.first - 2 * j, k.second + 2 * j + 2}] += sign * c;
      sign = -sign;
    }
  }
  return BivarPoly(std::move(out));
}

bool element_finite(const Element& x) {
  if (const auto* t = std::get_if<TaylorCoeffs>(&x)) {
    for (const auto& c : t->coeffs())
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }
  if (const auto* b = std::get_if<BivarPoly>(&x)) {
    for (const auto& [k, c] : b->terms())
      if (!std::isfinite(c)) return false;
    return true;
  }
  const auto& pw = std::get<PiecewiseExpPoly>(x);
  for (const Piece& p : pw.pieces())
    for (const ExpPolyTerm& t : p.terms)
      if (!std::isfinite(t.c)) return false;
  return true;
}

}  // namespace

Element apply_T(const OperatorConfig& op, const Element& x) {
  check_element(op.space(), x);
  switch (op.kind) {
    case OperatorKind::derivative:
      return differentiate(as_taylor(x));
    case OperatorKind::laplacian:
      return laplacian_fwd(as_bivar(x));
    case OperatorKind::translation_lp:
    case OperatorKind::translation_c0:
      return pw_translate_T(as_piecewise(x), op.a);
  }
  return x;
}

Element apply_S(const OperatorConfig& op, const Element& x) {
  check_element(op.space(), x);
  switch (op.kind) {
    case OperatorKind::derivative:
      return integrate_from_zero(as_taylor(x));
    case OperatorKind::laplacian:
      return laplacian_inv(as_bivar(x));
    case OperatorKind::translation_lp:
      return pw_translate_S(as_piecewise(x), op.a);
    case OperatorKind::translation_c0:
      return pw_translate_S_ramp(as_piecewise(x), op.a);
  }
  return x;
}

namespace {

// Regression check on the translation domain formula: drive a probe piece
// through k forward steps and require the accumulated weight exponent to be
// exactly k*t + k(k-1)/2 * a. The probe starts at k*a so it never clips.
void check_translation_exponent(const OperatorConfig& op, int k) {
  Piece probe;
  probe.lo = op.a * Rational(k);
  probe.hi = op.a * Rational(k) + Rational(1);
  probe.terms = {{1.0, 0, Rational(0), Rational(0)}};
  PiecewiseExpPoly f(op.w, {probe});
  for (int j = 0; j < k; ++j) f = pw_translate_T(f, op.a);
  const Piece& out = f.pieces().front();
  const ExpPolyTerm& t = out.terms.front();
  // anchored at lo = 0, so q*(t - lo) + e must read k*t + k(k-1)/2 * a
  if (out.lo != Rational(0) || t.q != Rational(k) ||
      t.e != op.a * Rational(static_cast<long long>(k) * (k - 1), 2))
    throw std::logic_error("translation weight exponent drifted");
}

}  // namespace

IterateResult iterate(const OperatorConfig& op, int k, const Element& x,
                      bool use_S) {
  if (k < 0) throw std::invalid_argument("iteration count must be >= 0");
  check_element(op.space(), x);
  const bool translation = op.kind == OperatorKind::translation_lp ||
                           op.kind == OperatorKind::translation_c0;
  if (translation && k > 0) check_translation_exponent(op, k);
  Element cur = x;
  for (int step = 1; step <= k; ++step) {
    cur = use_S ? apply_S(op, cur) : apply_T(op, cur);
    if (!element_finite(cur))
      throw CapacityError("iterate overflowed the floating range at step " +
                              std::to_string(step),
                          step - 1);
  }
  return IterateResult{k, std::move(cur), true};
}

}  // namespace hypermix

#pragma once

#include "hypermix/spaces.hpp"

namespace hypermix {

enum class OperatorKind {
  derivative,      // coefficient shift (a_k) -> ((k+1) a_{k+1}) on Taylor data
  laplacian,       // X_n Y_l -> X_{n-2} Y_l + X_n Y_{l-2}
  translation_lp,  // f -> w^t f(t+a) on the L_p space
  translation_c0,  // same map on the sup-norm space
};

/// An operator family member together with its parameters. The right
/// inverse S below satisfies T(S(f)) = f on the whole representable class;
/// S(T(f)) differs whenever T discards information (T is not injective).
struct OperatorConfig {
  OperatorKind kind = OperatorKind::derivative;
  double w = 0.0;
  Rational a{0};
  double p = 0.0;

  static OperatorConfig derivative() { return {OperatorKind::derivative, 0, Rational(0), 0}; }
  static OperatorConfig laplacian() { return {OperatorKind::laplacian, 0, Rational(0), 0}; }
  static OperatorConfig translation_lp(double w, const Rational& a, double p);
  static OperatorConfig translation_c0(double w, const Rational& a);

  Space space() const;
  bool operator==(const OperatorConfig& o) const;
};

/// Forward action T.
Element apply_T(const OperatorConfig& op, const Element& x);

/// Right inverse S: integration for the derivative, the inverse image with
/// the alternating correction series for the Laplacian, the weighted
/// right-shift for the translations (with the interpolating ramp on the
/// sup-norm space).
Element apply_S(const OperatorConfig& op, const Element& x);

struct IterateResult {
  int k = 0;
  Element value;
  bool in_domain = true;  // representable classes stay inside every power's domain
};

/// k-fold application of T (or S when use_S). For the translations a
/// symbolic probe checks that the accumulated weight exponent equals
/// k t + k(k-1) a / 2 in exact rational arithmetic. Non-finite coefficients
/// raise CapacityError carrying the largest k that completed.
IterateResult iterate(const OperatorConfig& op, int k, const Element& x,
                      bool use_S = false);

}  // namespace hypermix

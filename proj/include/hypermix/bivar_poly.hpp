#pragma once

#include <map>
#include <utility>

namespace hypermix {

/// Real polynomial on the open unit square, stored in the normalized monomial
/// basis X_n Y_l = x^n y^l / (n! l!). The basis is not orthogonal; the inner
/// product comes from the exact Gram matrix
///   <X_n Y_l, X_m Y_k> = 1/(n! m! (n+m+1)) * 1/(l! k! (l+k+1)).
class BivarPoly {
 public:
  using Key = std::pair<int, int>;  // (x power, y power) of the basis element

  BivarPoly() = default;
  explicit BivarPoly(std::map<Key, double> terms);

  static BivarPoly monomial(int n, int l, double c = 1.0);

  const std::map<Key, double>& terms() const { return terms_; }
  bool is_zero(double tol = 0.0) const;
  /// Largest n+l over stored terms; -1 for the zero element.
  int total_degree() const;

  double norm() const;

  /// Keep terms of total degree < d (the n-fold kernel part for d = 2n).
  BivarPoly truncated_total_degree_below(int d) const;
  BivarPoly tail_total_degree_from(int d) const;

  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(double s, const BivarPoly& a);

 private:
  std::map<Key, double> terms_;  // nonzero coefficients only
};

/// One axis factor of the Gram matrix: 1/(n! m! (n+m+1)).
double gram_axis_entry(int n, int m);

double distance(const BivarPoly& a, const BivarPoly& b);

}  // namespace hypermix

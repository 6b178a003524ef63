#pragma once

#include <complex>
#include <vector>

namespace hypermix {

/// Finite Taylor expansion f(z) = sum a_k z^k regarded as an element of the
/// Hilbert space with norm^2 = sum |a_k|^2. Canonical form strips trailing
/// exact zeros, so degree() is well defined.
class TaylorCoeffs {
 public:
  using Coeff = std::complex<double>;

  TaylorCoeffs() = default;
  explicit TaylorCoeffs(std::vector<Coeff> coeffs);

  static TaylorCoeffs monomial(int degree, Coeff c = 1.0);
  static TaylorCoeffs constant(Coeff c);

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  /// Degree of the highest nonzero coefficient; -1 for the zero element.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int k) const;

  bool is_zero(double tol = 0.0) const;
  double norm() const;

  /// Keep degrees < n (the kernel part under n-fold differentiation).
  TaylorCoeffs truncated_below(int n) const;
  /// Keep degrees >= n (the discarded tail).
  TaylorCoeffs tail_from(int n) const;

  friend TaylorCoeffs operator+(const TaylorCoeffs& a, const TaylorCoeffs& b);
  friend TaylorCoeffs operator-(const TaylorCoeffs& a, const TaylorCoeffs& b);
  friend TaylorCoeffs operator*(Coeff s, const TaylorCoeffs& a);

 private:
  void trim();
  std::vector<Coeff> coeffs_;  // no trailing zeros
};

double distance(const TaylorCoeffs& a, const TaylorCoeffs& b);

}  // namespace hypermix

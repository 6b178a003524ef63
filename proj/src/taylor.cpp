#include "hypermix/taylor.hpp"

#include <algorithm>
#include <cmath>

namespace hypermix {

TaylorCoeffs::TaylorCoeffs(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

TaylorCoeffs TaylorCoeffs::monomial(int degree, Coeff c) {
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0.0));
  v.back() = c;
  return TaylorCoeffs(std::move(v));
}

TaylorCoeffs TaylorCoeffs::constant(Coeff c) { return TaylorCoeffs({c}); }

TaylorCoeffs::Coeff TaylorCoeffs::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void TaylorCoeffs::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Coeff(0.0)) coeffs_.pop_back();
}

bool TaylorCoeffs::is_zero(double tol) const {
  for (const Coeff& c : coeffs_)
    if (std::abs(c) > tol) return false;
  return true;
}

double TaylorCoeffs::norm() const {
  double s = 0.0;
  for (const Coeff& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

TaylorCoeffs TaylorCoeffs::truncated_below(int n) const {
  if (n <= 0) return TaylorCoeffs();
  std::vector<Coeff> v(coeffs_.begin(),
                       coeffs_.begin() + std::min<std::size_t>(coeffs_.size(),
                                                               static_cast<std::size_t>(n)));
  return TaylorCoeffs(std::move(v));
}

TaylorCoeffs TaylorCoeffs::tail_from(int n) const {
  if (n <= 0) return *this;
  if (static_cast<std::size_t>(n) >= coeffs_.size()) return TaylorCoeffs();
  std::vector<Coeff> v(coeffs_.size(), Coeff(0.0));
  std::copy(coeffs_.begin() + n, coeffs_.end(), v.begin() + n);
  return TaylorCoeffs(std::move(v));
}

TaylorCoeffs operator+(const TaylorCoeffs& a, const TaylorCoeffs& b) {
  std::vector<TaylorCoeffs::Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                     TaylorCoeffs::Coeff(0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return TaylorCoeffs(std::move(v));
}

TaylorCoeffs operator-(const TaylorCoeffs& a, const TaylorCoeffs& b) {
  return a + TaylorCoeffs::Coeff(-1.0) * b;
}

TaylorCoeffs operator*(TaylorCoeffs::Coeff s, const TaylorCoeffs& a) {
  std::vector<TaylorCoeffs::Coeff> v = a.coeffs_;
  for (auto& c : v) c *= s;
  return TaylorCoeffs(std::move(v));
}

double distance(const TaylorCoeffs& a, const TaylorCoeffs& b) {
  return (a - b).norm();
}

}  // namespace hypermix

#include "hypermix/bivar_poly.hpp"

#include "hypermix/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace hypermix {

BivarPoly::BivarPoly(std::map<Key, double> terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0.0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

BivarPoly BivarPoly::monomial(int n, int l, double c) {
  std::map<Key, double> t;
  if (c != 0.0) t[{n, l}] = c;
  return BivarPoly(std::move(t));
}

bool BivarPoly::is_zero(double tol) const {
  for (const auto& [k, c] : terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

double gram_axis_entry(int n, int m) {
  if (n + m <= 169) return inv_factorial(n) * inv_factorial(m) / (n + m + 1);
  return std::exp(-log_factorial(n) - log_factorial(m) -
                  std::log(static_cast<double>(n + m + 1)));
}

double BivarPoly::norm() const {
  // v^T G v over the sparse support; G factors per axis.
  double s = 0.0;
  for (const auto& [ki, ci] : terms_)
    for (const auto& [kj, cj] : terms_)
      s += ci * cj * gram_axis_entry(ki.first, kj.first) *
           gram_axis_entry(ki.second, kj.second);
  return std::sqrt(std::max(s, 0.0));  // clamp roundoff on near-zero inputs
}

BivarPoly BivarPoly::truncated_total_degree_below(int d) const {
  std::map<Key, double> t;
  for (const auto& [k, c] : terms_)
    if (k.first + k.second < d) t[k] = c;
  return BivarPoly(std::move(t));
}

BivarPoly BivarPoly::tail_total_degree_from(int d) const {
  std::map<Key, double> t;
  for (const auto& [k, c] : terms_)
    if (k.first + k.second >= d) t[k] = c;
  return BivarPoly(std::move(t));
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  std::map<BivarPoly::Key, double> t = a.terms_;
  for (const auto& [k, c] : b.terms_) t[k] += c;
  return BivarPoly(std::move(t));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
  return a + (-1.0 * b);
}

BivarPoly operator*(double s, const BivarPoly& a) {
  std::map<BivarPoly::Key, double> t = a.terms_;
  for (auto& [k, c] : t) c *= s;
  return BivarPoly(std::move(t));
}

double distance(const BivarPoly& a, const BivarPoly& b) {
  return (a - b).norm();
}

}  // namespace hypermix

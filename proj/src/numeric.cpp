#include "hypermix/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <string>

namespace hypermix {

namespace {

constexpr int kFactTableSize = 171;  // 170! is the last finite double factorial

const std::array<double, kFactTableSize>& fact_table() {
  static const auto table = [] {
    std::array<double, kFactTableSize> t{};
    t[0] = 1.0;
    for (int n = 1; n < kFactTableSize; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

}  // namespace

double factorial(int n) {
  if (n < 0) return std::numeric_limits<double>::quiet_NaN();
  if (n < kFactTableSize) return fact_table()[n];
  return std::numeric_limits<double>::infinity();
}

double log_factorial(int n) {
  if (n < 0) return std::numeric_limits<double>::quiet_NaN();
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double inv_factorial(int n) {
  if (n < 0) return 0.0;
  if (n < kFactTableSize) return 1.0 / fact_table()[n];
  return std::exp(-log_factorial(n));
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

double log_sum_exp(const double* xs, int count) {
  double m = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) m = std::max(m, xs[i]);
  if (!std::isfinite(m)) return m;  // empty, all -inf, or a stray +inf
  double s = 0.0;
  for (int i = 0; i < count; ++i) s += std::exp(xs[i] - m);
  return m + std::log(s);
}

std::string format_sig12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round_sig12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_sig12(x).c_str(), nullptr);
}

}  // namespace hypermix

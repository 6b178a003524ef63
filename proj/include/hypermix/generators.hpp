#pragma once

#include "hypermix/spaces.hpp"

#include <cstdint>
#include <random>

namespace hypermix {

/// Deterministic RNG: doubles are built from raw mt19937_64 bits, so streams
/// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], unbiased via rejection.
  int uniform_int(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return lo + static_cast<int>(x % span);
  }

  bool flip() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

/// Random element of the dense representable class of the space: a complex
/// polynomial, a normalized-basis polynomial, a step combination, or a
/// continuous piecewise-linear spline (for the sup-norm space). Never zero.
/// max_degree bounds the polynomial degree or the support end.
Element random_element(Rng& rng, const Space& space, int max_degree = 12);

/// Same, scaled to unit norm.
Element random_unit_element(Rng& rng, const Space& space, int max_degree = 12);

/// Random open ball; radius uniform in [radius_lo, radius_hi].
BallSpec random_ball(Rng& rng, const Space& space, int max_degree = 8,
                     double radius_lo = 0.05, double radius_hi = 1.5);

}  // namespace hypermix

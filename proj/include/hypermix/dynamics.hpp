#pragma once

#include "hypermix/kernels.hpp"

#include <complex>
#include <vector>

namespace hypermix {

/// How the "for all n >= N" claim behind a witness set is justified:
/// tested_range means only the indices up to n_max were checked; analytic
/// means a closed-form decay bound covers every index past the tested range.
enum class BoundMode { tested_range, analytic };

/// Checkable record that u_n lies in the prescribed open ball and that
/// T^n u_n reproduces the target. residual and delta are recomputed from
/// scratch (residual via iterate), so a certificate re-verifies on its own.
struct WitnessCertificate {
  OperatorConfig op;
  int n = 0;
  Element u_n;
  double residual = 0.0;  // distance(T^n u_n, target)
  double delta = 0.0;     // distance(u_n, ball center)
  double radius = 0.0;
  bool inside = false;    // delta < radius, strictly
  BoundMode bound_mode = BoundMode::tested_range;
};

struct DecayRow {
  int n = 0;
  double s_norm = 0.0;      // ||S^n x||
  double kernel_gap = 0.0;  // ||y - w_n||
  double combined = 0.0;    // ||S^n x + w_n - y||
};

struct DecayTable {
  std::vector<DecayRow> rows;
  bool pass = false;  // combined below tolerance at n_max, tail nonincreasing
  double tolerance = 0.0;
};

struct WitnessSet {
  int first_index = 0;  // least N whose run [N, n_max] validates throughout
  BoundMode bound_mode = BoundMode::tested_range;
  std::vector<WitnessCertificate> certificates;  // one per n in [N, n_max]
};

/// Mixing-criterion diagnostics: how fast S^n x decays, how well the kernel
/// approximates y, and the combined approximation error of S^n x + w_n.
DecayTable hm_criterion_table(const OperatorConfig& op, const Element& x,
                              const Element& y, int n_max,
                              double tolerance = 1e-10);

/// Witnesses u_n in U with T^n u_n = y for every n from first_index to n_max.
/// Construction: u_n = (kernel projection of the center) + S^n y, so the
/// forward orbit lands on y exactly. Throws NoWitnessInRange when no run
/// reaches n_max.
WitnessSet hm_witnesses(const OperatorConfig& op, const BallSpec& U,
                        const Element& y, int n_max = 64,
                        double tolerance = 1e-10);

/// Smallest single n with a valid witness (transitivity-style search).
/// The zero target is handled by zero_witness instead.
WitnessCertificate stt_witness(const OperatorConfig& op, const BallSpec& U,
                               const Element& y, int n_max = 64,
                               double tolerance = 1e-10);

/// Zero-inclusion: u_n is the kernel projection of the center itself, so
/// delta equals the projection gap and saturates at exactly 0.
WitnessSet zero_witness(const OperatorConfig& op, const BallSpec& U,
                        int n_max = 64, double tolerance = 1e-10);

/// One element of U whose n-th forward image is the center of V.
WitnessCertificate transitivity_witness(const OperatorConfig& op,
                                        const BallSpec& U, const BallSpec& V,
                                        int n_max = 64,
                                        double tolerance = 1e-10);

struct LeadingPolySet {
  int first_index = 0;
  BoundMode bound_mode = BoundMode::tested_range;
  std::vector<TaylorCoeffs> polynomials;  // p_n for n in [first_index, n_max]
  std::complex<double> alpha;
};

/// Polynomials p_n in the Hardy ball U with exact degree n and exact leading
/// coefficient alpha/n!. alpha = 0 is rejected.
LeadingPolySet leading_polynomials(std::complex<double> alpha, const BallSpec& U,
                                   int n_max = 64);

struct PeriodicVector {
  TaylorCoeffs f;                     // truncated exponential sum
  std::complex<double> lambda;        // the root of unity used
  double defect = 0.0;                // ||D^period f - f||, from the tail
};

/// Truncated exponential f = sum_{k<=degree} lambda^k z^k / k! with lambda a
/// primitive period-th root of unity; the defect shrinks factorially in the
/// truncation degree. root_index selects which root (default the principal).
PeriodicVector periodic_vector_derivative(int period, int degree,
                                          int root_index = 1);

}  // namespace hypermix

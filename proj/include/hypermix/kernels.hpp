#pragma once

#include "hypermix/operators.hpp"

#include <vector>

namespace hypermix {

/// Basis-aligned projection of x onto the generalized kernel of T^n:
///   derivative   - coefficients of degree < n
///   laplacian    - terms of total degree < 2n
///   translations - support restricted to (0, n*a]
/// gap = ||x - w_n|| is nonincreasing in n and hits exactly 0 once the whole
/// element fits inside the kernel class (the saturation index).
struct KernelProjection {
  int n = 0;
  Element w_n;
  double gap = 0.0;
};

KernelProjection kernel_project(const OperatorConfig& op, const Element& x, int n);

/// Membership by actually applying T^n and testing the result against zero
/// (coefficient bounds <= tol).
bool is_in_kernel(const OperatorConfig& op, const Element& f, int n,
                  double tol = 1e-12);

struct GkRow {
  int n = 0;
  double gap = 0.0;
  bool saturated = false;  // gap is exactly zero
};

/// Projection gaps for n = 1..n_max.
std::vector<GkRow> gk_density_table(const OperatorConfig& op, const Element& x,
                                    int n_max);

/// First n with zero gap, computed from the data without projecting:
/// degree+1, ceil((total degree + 1)/2), or ceil(support end / a).
/// Returns 1 for the zero element.
int kernel_saturation_index(const OperatorConfig& op, const Element& x);

}  // namespace hypermix

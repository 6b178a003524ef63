#include "hypermix/kernels.hpp"

#include "hypermix/errors.hpp"

#include <algorithm>

namespace hypermix {

KernelProjection kernel_project(const OperatorConfig& op, const Element& x, int n) {
  if (n < 1) throw std::invalid_argument("projection order must be >= 1");
  const Space s = op.space();
  check_element(s, x);
  KernelProjection out;
  out.n = n;
  switch (op.kind) {
    case OperatorKind::derivative: {
      const TaylorCoeffs& f = as_taylor(x);
      out.w_n = f.truncated_below(n);
      out.gap = f.tail_from(n).norm();
      break;
    }
    case OperatorKind::laplacian: {
      const BivarPoly& f = as_bivar(x);
      out.w_n = f.truncated_total_degree_below(2 * n);
      out.gap = f.tail_total_degree_from(2 * n).norm();
      break;
    }
    case OperatorKind::translation_lp:
    case OperatorKind::translation_c0: {
      const PiecewiseExpPoly& f = as_piecewise(x);
      const Rational cut = op.a * Rational(n);
      out.w_n = pw_restrict_upto(f, cut);
      out.gap = norm(s, Element(pw_restrict_from(f, cut)));
      break;
    }
  }
  return out;
}

bool is_in_kernel(const OperatorConfig& op, const Element& f, int n, double tol) {
  IterateResult r = iterate(op, n, f, /*use_S=*/false);
  return is_zero_element(op.space(), r.value, tol);
}

std::vector<GkRow> gk_density_table(const OperatorConfig& op, const Element& x,
                                    int n_max) {
  std::vector<GkRow> rows;
  rows.reserve(static_cast<std::size_t>(std::max(n_max, 0)));
  for (int n = 1; n <= n_max; ++n) {
    KernelProjection p = kernel_project(op, x, n);
    rows.push_back({n, p.gap, p.gap == 0.0});
  }
  return rows;
}

int kernel_saturation_index(const OperatorConfig& op, const Element& x) {
  check_element(op.space(), x);
  switch (op.kind) {
    case OperatorKind::derivative: {
      int deg = as_taylor(x).degree();
      return deg < 0 ? 1 : deg + 1;
    }
    case OperatorKind::laplacian: {
      int deg = as_bivar(x).total_degree();
      return deg < 0 ? 1 : static_cast<int>((deg + 2) / 2);  // ceil((deg+1)/2)
    }
    case OperatorKind::translation_lp:
    case OperatorKind::translation_c0: {
      const PiecewiseExpPoly& f = as_piecewise(x);
      if (f.empty()) return 1;
      return static_cast<int>(std::max<long long>(1, rat_ceil(f.support_end() / op.a)));
    }
  }
  return 1;
}

}  // namespace hypermix

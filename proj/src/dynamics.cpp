#include "hypermix/dynamics.hpp"

#include "hypermix/errors.hpp"
#include "hypermix/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace hypermix {

namespace {

// Closed-form upper bound for ||S^n y|| where one exists. The translation
// bounds come from the weight picked up while shifting mass to the right:
// each step past the first multiplies the norm by at most w^{-a(n-1)} in
// L_p; in C0 the shifted function vanishes at 0 from step one onward, which
// delays the gain by one step. No such bound is available for the
// polynomial Laplacian family, whose S^n norms grow on fixed monomials.
std::optional<double> analytic_snorm_bound(const OperatorConfig& op,
                                           double norm_y, int n) {
  switch (op.kind) {
    case OperatorKind::derivative:
      return norm_y / static_cast<double>(n < 1 ? 1 : n);
    case OperatorKind::translation_lp: {
      double expo = -to_double(op.a) * 0.5 * static_cast<double>(n) *
                    static_cast<double>(n - 1) * std::log(op.w);
      return norm_y * std::exp(expo);
    }
    case OperatorKind::translation_c0: {
      double m = static_cast<double>(n < 2 ? 2 : n);
      double expo = -to_double(op.a) * 0.5 * (m - 1.0) * (m - 2.0) *
                    std::log(op.w);
      return norm_y * std::exp(expo);
    }
    case OperatorKind::laplacian:
      return std::nullopt;
  }
  return std::nullopt;
}

// Least n0 such that ok[n] holds for every n in [n0, last]; nullopt if even
// the final index fails. Indices into ok are n - first.
std::optional<int> least_run_start(const std::vector<bool>& ok, int first) {
  int last = first + static_cast<int>(ok.size()) - 1;
  if (ok.empty() || !ok.back()) return std::nullopt;
  int n0 = last;
  for (int n = last - 1; n >= first; --n) {
    if (!ok[static_cast<size_t>(n - first)]) break;
    n0 = n;
  }
  return n0;
}

WitnessCertificate make_certificate(const OperatorConfig& op, int n,
                                    Element u_n, const Element& target,
                                    const BallSpec& U, BoundMode mode) {
  const Space sp = op.space();
  WitnessCertificate cert;
  cert.op = op;
  cert.n = n;
  cert.delta = distance(sp, u_n, U.center);
  cert.radius = U.radius;
  cert.inside = cert.delta < U.radius;
  Element image = iterate(op, n, u_n).value;
  cert.residual = distance(sp, image, target);
  cert.u_n = std::move(u_n);
  cert.bound_mode = mode;
  return cert;
}

}  // namespace

DecayTable hm_criterion_table(const OperatorConfig& op, const Element& x,
                              const Element& y, int n_max, double tolerance) {
  const Space sp = op.space();
  check_element(sp, x);
  check_element(sp, y);
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");

  DecayTable table;
  table.tolerance = tolerance;
  Element sn = x;
  for (int n = 1; n <= n_max; ++n) {
    sn = apply_S(op, sn);
    KernelProjection proj = kernel_project(op, y, n);
    DecayRow row;
    row.n = n;
    row.s_norm = norm(sp, sn);
    row.kernel_gap = proj.gap;
    row.combined = distance(sp, add(sp, sn, proj.w_n), y);
    table.rows.push_back(row);
  }

  bool tail_ok = table.rows.back().combined <= tolerance;
  int tail = std::min<int>(5, static_cast<int>(table.rows.size()));
  for (int i = n_max - tail; tail_ok && i + 1 < n_max; ++i) {
    double prev = table.rows[static_cast<size_t>(i)].combined;
    double next = table.rows[static_cast<size_t>(i + 1)].combined;
    if (next > prev * (1.0 + 1e-9) + 1e-30) tail_ok = false;
  }
  table.pass = tail_ok;
  return table;
}

WitnessSet hm_witnesses(const OperatorConfig& op, const BallSpec& U,
                        const Element& y, int n_max, double tolerance) {
  const Space sp = op.space();
  if (!(U.space == sp)) throw SpaceMismatchError("ball lives in a different space");
  check_element(sp, y);
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");

  // Build every u_n first, then locate the least N whose whole run up to
  // n_max stays strictly inside the ball with a verified forward image.
  std::vector<Element> candidates;
  std::vector<double> deltas;
  std::vector<bool> ok;
  candidates.reserve(static_cast<size_t>(n_max) + 1);
  Element sn = y;  // S^n y, advanced incrementally
  for (int n = 0; n <= n_max; ++n) {
    Element u_n = y;
    if (n > 0) {
      sn = apply_S(op, sn);
      KernelProjection proj = kernel_project(op, U.center, n);
      u_n = add(sp, proj.w_n, sn);
    }
    double delta = distance(sp, u_n, U.center);
    Element image = iterate(op, n, u_n).value;
    double residual = distance(sp, image, y);
    deltas.push_back(delta);
    ok.push_back(delta < U.radius && residual <= tolerance);
    candidates.push_back(std::move(u_n));
  }

  std::optional<int> first = least_run_start(ok, 0);
  if (!first) {
    std::vector<std::pair<int, double>> trace;
    for (int n = 0; n <= n_max; ++n)
      trace.emplace_back(n, deltas[static_cast<size_t>(n)]);
    throw NoWitnessInRange("no witness found up to n_max = " + std::to_string(n_max), std::move(trace));
  }

  // The tail past n_max is covered analytically when the kernel projection
  // has saturated by n_max + 1 (so delta_n = ||S^n y|| there) and the
  // closed-form decay bound already sits strictly inside the radius.
  BoundMode mode = BoundMode::tested_range;
  double norm_y = norm(sp, y);
  std::optional<double> bound = analytic_snorm_bound(op, norm_y, n_max + 1);
  if (bound && kernel_saturation_index(op, U.center) <= n_max + 1 &&
      *bound < U.radius) {
    mode = BoundMode::analytic;
  }

  WitnessSet set;
  set.first_index = *first;
  set.bound_mode = mode;
  for (int n = *first; n <= n_max; ++n) {
    set.certificates.push_back(make_certificate(
        op, n, std::move(candidates[static_cast<size_t>(n)]), y, U, mode));
  }
  return set;
}

WitnessCertificate stt_witness(const OperatorConfig& op, const BallSpec& U,
                               const Element& y, int n_max, double tolerance) {
  const Space sp = op.space();
  if (!(U.space == sp)) throw SpaceMismatchError("ball lives in a different space");
  check_element(sp, y);
  if (is_zero_element(sp, y, 0.0))
    throw std::invalid_argument("target must be nonzero; use zero_witness for 0");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");

  std::vector<std::pair<int, double>> trace;
  Element sn = y;
  for (int n = 0; n <= n_max; ++n) {
    Element u_n = y;
    if (n > 0) {
      sn = apply_S(op, sn);
      KernelProjection proj = kernel_project(op, U.center, n);
      u_n = add(sp, proj.w_n, sn);
    }
    double delta = distance(sp, u_n, U.center);
    trace.emplace_back(n, delta);
    if (delta < U.radius) {
      Element image = iterate(op, n, u_n).value;
      if (distance(sp, image, y) <= tolerance) {
        return make_certificate(op, n, std::move(u_n), y, U,
                                BoundMode::tested_range);
      }
    }
  }
  throw NoWitnessInRange("no witness found up to n_max = " + std::to_string(n_max), std::move(trace));
}

WitnessSet zero_witness(const OperatorConfig& op, const BallSpec& U, int n_max,
                        double tolerance) {
  const Space sp = op.space();
  if (!(U.space == sp)) throw SpaceMismatchError("ball lives in a different space");
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");

  const Element zero = zero_element(sp);
  std::vector<Element> candidates;
  std::vector<double> deltas;
  std::vector<bool> ok;
  for (int n = 1; n <= n_max; ++n) {
    KernelProjection proj = kernel_project(op, U.center, n);
    double delta = distance(sp, proj.w_n, U.center);
    Element image = iterate(op, n, proj.w_n).value;
    double residual = norm(sp, image);
    deltas.push_back(delta);
    ok.push_back(delta < U.radius && residual <= tolerance);
    candidates.push_back(std::move(proj.w_n));
  }

  std::optional<int> first = least_run_start(ok, 1);
  if (!first) {
    std::vector<std::pair<int, double>> trace;
    for (int n = 1; n <= n_max; ++n)
      trace.emplace_back(n, deltas[static_cast<size_t>(n - 1)]);
    throw NoWitnessInRange("no witness found up to n_max = " + std::to_string(n_max), std::move(trace));
  }

  // The gap to the kernel never grows with n and hits exactly zero at the
  // saturation index, so a saturation point inside the tested range upgrades
  // the claim from the tested range to every larger n.
  BoundMode mode = kernel_saturation_index(op, U.center) <= n_max + 1
                       ? BoundMode::analytic
                       : BoundMode::tested_range;

  WitnessSet set;
  set.first_index = *first;
  set.bound_mode = mode;
  for (int n = *first; n <= n_max; ++n) {
    set.certificates.push_back(make_certificate(
        op, n, std::move(candidates[static_cast<size_t>(n - 1)]), zero, U,
        mode));
  }
  return set;
}

WitnessCertificate transitivity_witness(const OperatorConfig& op,
                                        const BallSpec& U, const BallSpec& V,
                                        int n_max, double tolerance) {
  const Space sp = op.space();
  if (!(U.space == sp) || !(V.space == sp))
    throw SpaceMismatchError("balls live in a different space");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");

  std::vector<std::pair<int, double>> trace;
  Element sn = V.center;
  for (int n = 0; n <= n_max; ++n) {
    Element u = V.center;
    if (n > 0) {
      sn = apply_S(op, sn);
      KernelProjection proj = kernel_project(op, U.center, n);
      u = add(sp, proj.w_n, sn);
    }
    double delta = distance(sp, u, U.center);
    trace.emplace_back(n, delta);
    if (delta < U.radius) {
      Element image = iterate(op, n, u).value;
      double residual = distance(sp, image, V.center);
      // The image must land inside V itself, not merely near its center,
      // so a radius smaller than the tolerance still gets a strict check.
      if (residual <= tolerance && residual < V.radius) {
        return make_certificate(op, n, std::move(u), V.center, U,
                                BoundMode::tested_range);
      }
    }
  }
  throw NoWitnessInRange("no witness found up to n_max = " + std::to_string(n_max), std::move(trace));
}

LeadingPolySet leading_polynomials(std::complex<double> alpha,
                                   const BallSpec& U, int n_max) {
  if (U.space.kind != SpaceKind::hardy)
    throw SpaceMismatchError("leading-coefficient polynomials need the Hardy space");
  if (alpha == std::complex<double>(0.0, 0.0))
    throw std::invalid_argument("alpha must be nonzero");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");

  const TaylorCoeffs& center = as_taylor(U.center);
  std::vector<TaylorCoeffs> polys;
  std::vector<double> deltas;
  std::vector<bool> ok;
  for (int n = 0; n <= n_max; ++n) {
    TaylorCoeffs p =
        center.truncated_below(n) + TaylorCoeffs::monomial(n, alpha / factorial(n));
    double delta = (p - center).norm();
    deltas.push_back(delta);
    ok.push_back(delta < U.radius);
    polys.push_back(std::move(p));
  }

  std::optional<int> first = least_run_start(ok, 0);
  if (!first) {
    std::vector<std::pair<int, double>> trace;
    for (int n = 0; n <= n_max; ++n)
      trace.emplace_back(n, deltas[static_cast<size_t>(n)]);
    throw NoWitnessInRange("no witness found up to n_max = " + std::to_string(n_max), std::move(trace));
  }

  // Past the center's degree the distance is exactly |alpha|/n!, which is
  // strictly decreasing, so one sub-radius value covers the whole tail.
  BoundMode mode = BoundMode::tested_range;
  if (center.degree() < n_max + 1 &&
      std::abs(alpha) * inv_factorial(n_max + 1) < U.radius) {
    mode = BoundMode::analytic;
  }

  LeadingPolySet set;
  set.first_index = *first;
  set.bound_mode = mode;
  set.alpha = alpha;
  for (int n = *first; n <= n_max; ++n)
    set.polynomials.push_back(std::move(polys[static_cast<size_t>(n)]));
  return set;
}

PeriodicVector periodic_vector_derivative(int period, int degree,
                                          int root_index) {
  if (period < 1) throw std::invalid_argument("period must be at least 1");
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");

  // lambda = exp(2*pi*i*root_index/period), taken exactly on the axes so the
  // common periods 1, 2, 4 stay free of trigonometric noise.
  std::complex<double> lambda;
  int r = ((root_index % period) + period) % period;
  if ((4LL * r) % period == 0) {
    static const std::complex<double> axis[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    lambda = axis[(4LL * r / period) % 4];
  } else {
    double angle = 2.0 * std::acos(-1.0) * static_cast<double>(r) /
                   static_cast<double>(period);
    lambda = std::polar(1.0, angle);
  }

  std::vector<std::complex<double>> coeffs(static_cast<size_t>(degree) + 1);
  coeffs[0] = {1.0, 0.0};
  for (int k = 1; k <= degree; ++k)
    coeffs[static_cast<size_t>(k)] =
        coeffs[static_cast<size_t>(k - 1)] * lambda / static_cast<double>(k);

  // Applying the derivative period times maps coefficient k + period down to
  // slot k and reproduces coeffs there; only the top `period` slots lose
  // their source, so the defect is the norm of that tail, accumulated from
  // the stored coefficients rather than from a lossy float iteration.
  double tail_sq = 0.0;
  for (int k = std::max(0, degree - period + 1); k <= degree; ++k)
    tail_sq += std::norm(coeffs[static_cast<size_t>(k)]);

  PeriodicVector out;
  out.f = TaylorCoeffs(std::move(coeffs));
  out.lambda = lambda;
  out.defect = std::sqrt(tail_sq);
  return out;
}

}  // namespace hypermix

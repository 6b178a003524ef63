#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace hypermix {

/// n! as a double. Exact integer product for n <= 170 (cached table),
/// +inf beyond the double range.
double factorial(int n);

/// log(n!) via lgamma; the log-space route for factorial-scale quantities.
double log_factorial(int n);

/// 1/n!; switches to exp(-log n!) past the table.
double inv_factorial(int n);

/// Binomial coefficient as a double (exact for the small n used here).
double binomial(int n, int k);

/// log(sum exp(xs)) with the usual max shift; -inf for an empty/all--inf set.
double log_sum_exp(const double* xs, int count);

/// Round to 12 significant digits (report formatting; see format_sig12).
double round_sig12(double x);

/// Fixed 12-significant-digit decimal rendering used by all reports.
/// Guarantees byte-identical output for identical inputs.
std::string format_sig12(double x);

}  // namespace hypermix

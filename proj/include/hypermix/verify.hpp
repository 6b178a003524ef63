#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypermix {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // one-line summary, or the first failure found
};

/// Cross-module invariant suite: right-inverse identities, norm decay
/// bounds, exact inverse cancellation, witness soundness, saturation
/// predictions, serialization round-trips. Deterministic for a fixed seed.
std::vector<CheckResult> run_verify_suite(std::uint64_t seed = 20260817u);

bool all_passed(const std::vector<CheckResult>& results);

/// Fixed-width pass/fail table.
std::string format_check_table(const std::vector<CheckResult>& results);

}  // namespace hypermix

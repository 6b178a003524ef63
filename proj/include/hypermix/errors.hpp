#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypermix {

/// Operand does not live in the space an operation expects
/// (wrong element family, or translation elements with different bases).
struct SpaceMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Iterating an operator would overflow the floating representation.
/// max_safe_k is the largest iteration count that completed.
struct CapacityError : std::runtime_error {
  int max_safe_k;
  CapacityError(const std::string& what, int safe)
      : std::runtime_error(what), max_safe_k(safe) {}
};

/// Malformed textual or JSON input; path points at the offending field.
struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
  ParseError(const std::string& path, const std::string& what)
      : std::invalid_argument(path + ": " + what) {}
};

/// A witness search exhausted [0, n_max] without a valid run.
/// Carries (n, delta) diagnostics so callers can report the decay profile.
struct NoWitnessInRange : std::runtime_error {
  std::vector<std::pair<int, double>> deltas;
  NoWitnessInRange(const std::string& what,
                   std::vector<std::pair<int, double>> rows)
      : std::runtime_error(what), deltas(std::move(rows)) {}
};

}  // namespace hypermix

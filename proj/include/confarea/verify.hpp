#pragma once

#include <optional>
#include <string>
#include <vector>

#include "confarea/area.hpp"

namespace confarea {

struct CheckResult {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

bool is_known_suite(const std::string& name);

/// Runs one invariant suite (or "all"). `user_tail` adds checks for a
/// caller-supplied exterior map to the gronwall suite. Deterministic: every
/// random input comes from a fixed seed. Throws DomainError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const std::optional<LaurentTail>& user_tail = std::nullopt);

}  // namespace confarea

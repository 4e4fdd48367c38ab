#pragma once

// Named verification suites, sample dumps and the suite registry.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/report.hpp"

namespace cayley {

struct SuiteConfig {
  std::string suite;
  /// Restrict to one level; all applicable levels when empty.
  std::optional<int> n;
  int samples = 1000;
  std::uint64_t seed = 0;
  Tolerances tol;
  bool parallel = false;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  int min_level = 0;
};

/// Fixed registry, in run order for "all".
const std::vector<SuiteInfo>& suite_registry();

/// One line per suite: name and what it verifies.
std::string list_suites();

/// Throws UsageError for an unknown suite, samples < 1 or a level the suite
/// does not cover. NumericalError inside a suite becomes a failed check.
VerificationReport run_suite(const SuiteConfig& config);

/// Points serialized in the matrix layout; kind is plane, complex or infinity.
std::string sample_dump(const std::string& kind, int n, int count, std::uint64_t seed);

}  // namespace cayley

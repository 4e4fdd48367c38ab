#pragma once

// Verification reports and their canonical serialization.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace cayley {

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal };

const char* relation_symbol(Relation r);

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::Less;
  bool pass = false;
};

/// Builds a check and evaluates it. NaN values never pass.
Check make_check(std::string name, double value, Relation relation, double threshold);

struct Tolerances {
  double alg = 1e-12;
  double geo = 1e-9;
};

struct VerificationReport {
  std::string suite;
  std::optional<int> n;
  int samples = 0;
  std::uint64_t seed = 0;
  Tolerances tol;
  std::vector<Check> checks;
  /// Informational values; never affect pass.
  std::map<std::string, std::variant<double, std::string>> info;
  /// Excluded from serialization unless requested, so reports stay reproducible.
  std::optional<double> wall_seconds;

  bool pass() const;
};

nlohmann::json to_json(const VerificationReport& report);

/// Sorted keys, compact separators, floats as %.17g, non-finite floats as null.
std::string canonical_dump(const nlohmann::json& j);

std::string format_json(const VerificationReport& report);
std::string format_text(const VerificationReport& report);

}  // namespace cayley

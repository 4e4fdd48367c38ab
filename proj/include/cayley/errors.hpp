#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Caller passed arguments outside an operation's contract (level mismatch,
/// bad parameters, unknown suite). The CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical guard fired: rank ambiguity, a nonvanishing guard,
/// a chart that cannot be applied.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankAmbiguityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace cayley

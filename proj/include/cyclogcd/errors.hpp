#pragma once

#include <stdexcept>
#include <string>

namespace cyclogcd {

// Malformed or out-of-range input (zero where a positive value is required,
// size caps, unparsable polynomials).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A hypothesis of the construction does not hold for the supplied inputs.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed certificate disagreed with its check. Always fatal: it means
// either an implementation bug or a false mathematical claim.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclogcd

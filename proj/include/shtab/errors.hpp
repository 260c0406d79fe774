#pragma once

#include <stdexcept>
#include <string>

namespace shtab {

/// A caller broke an operation's precondition (bad length, bad shape, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Indicates a bug in an operator or a
/// convention mismatch, never bad user input.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (word literals, shape lists, JSON documents).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shtab

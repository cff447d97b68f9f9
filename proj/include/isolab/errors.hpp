#pragma once

#include <stdexcept>
#include <string>

namespace isolab {

/// A parameter violates an operation's precondition (bad parity, mismatched
/// ground set, malformed permutation, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An index or size argument lies outside the permitted range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A quantity is undefined at the requested point (division by α(1−α),
/// margins of an empty family, infeasible densities).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace isolab

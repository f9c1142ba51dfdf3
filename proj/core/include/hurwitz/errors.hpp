#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Input outside the mathematical domain of an operation (negative factorial,
/// zero denominator, mismatched sizes, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured size bound (enumeration or expansion too large).
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A consistency check that can only fail because of a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hurwitz

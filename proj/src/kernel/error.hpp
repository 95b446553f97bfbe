#pragma once

#include <stdexcept>
#include <string>

namespace vaw {

// Error taxonomy mirrored 1:1 by the C API status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (expressions, chart documents, reports).
struct ParseError : Error {
  using Error::Error;
};

// Structurally valid input outside the mathematical domain of an operation
// (division by zero, non-exact division, inadmissible eigenvalue, ...).
struct DomainError : Error {
  using Error::Error;
};

// A matrix that must be invertible is not.
struct SingularError : Error {
  using Error::Error;
};

// An operation was requested on an element shape the structure tables do not
// cover.  Deliberately distinct from DomainError: callers (the check suites)
// treat it as "narrow the sample pool", not "bad input".
struct UnsupportedShape : Error {
  using Error::Error;
};

}  // namespace vaw

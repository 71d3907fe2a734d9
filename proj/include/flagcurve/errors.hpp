#pragma once

#include <stdexcept>
#include <string>

namespace flagcurve {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (CLI exit code 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

// The input is not generic enough for the requested operation
// (multiple roots, simultaneous walls, a matrix on a wall).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A retry loop hit its cap before the required property could be verified.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// An exact check failed that the underlying mathematics says cannot fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace flagcurve

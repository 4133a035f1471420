#pragma once

#include <stdexcept>
#include <string>

namespace hsc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed literal or argument; the CLI maps these to the usage exit code.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a type invariant (e.g. a > b for an ellipsoid).
class InvalidDomain : public Error {
 public:
  using Error::Error;
};

class NonUniqueMinimizer : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

class NoValidK : public Error {
 public:
  using Error::Error;
};

class PQNotMultipleOfThree : public Error {
 public:
  using Error::Error;
};

class PQDMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hsc

#pragma once

#include <stdexcept>
#include <string>

namespace hgop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter or hypothesis outside the range an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed symbol/space strings or coefficient files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A (source, target) space pair for which no characterization is implemented.
class NoTheoremApplies : public Error {
 public:
  using Error::Error;
};

/// Iterative or adaptive numerics that did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The integral defining the operator is (numerically) divergent for the input.
class NotWellDefined : public Error {
 public:
  using Error::Error;
};

/// A dense allocation above the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgop

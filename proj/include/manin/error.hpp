#pragma once

#include <stdexcept>
#include <string>

namespace manin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched dimensions or ambient algebras.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (singular matrix, root sum not a root, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internally verified postcondition failed, or two independent oracles disagree.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

class UnsupportedSeries : public Error {
 public:
  explicit UnsupportedSeries(const std::string& series)
      : Error("unsupported series: " + series) {}
};

/// Malformed serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace manin

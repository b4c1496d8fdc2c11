#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit (ring order, enumeration, group order) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction was rejected, e.g. a reducible modulus for GF(p^k).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Tables or maps violate a ring, module or automorphism law. The message
/// names the law and the witnessing elements.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed construction expression, label, polynomial or instance file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringlab

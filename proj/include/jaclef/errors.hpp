#pragma once

#include <stdexcept>
#include <string>

namespace jaclef {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or .poly file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A rational coefficient is not representable in the chosen prime field.
class BadPrimeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A stabilization-based computation (saturation, Tjurina number) did not
/// stabilize before its cap. Never silently replaced by a guess.
class CertificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace jaclef

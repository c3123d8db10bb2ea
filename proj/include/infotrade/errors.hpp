#pragma once

#include <stdexcept>
#include <string>

namespace infotrade {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (matrix sizes, vector lengths, input spaces).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value lies outside the domain an operation is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A request exceeds a configured resource guard (matrix size, tree depth).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A protocol tree breaks one of its structural invariants.
class InvalidProtocol : public Error {
 public:
  using Error::Error;
};

}  // namespace infotrade

#pragma once

#include <stdexcept>
#include <string>

namespace deform {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeParameter : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the domain where an operation is defined.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// First-order correction diverges for the requested level.
class DivergentLevel : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration ran out of subdivisions before reaching tolerance.
class NonConvergent : public Error {
 public:
  using Error::Error;
};

class InvalidData : public Error {
 public:
  using Error::Error;
};

class NoRoot : public Error {
 public:
  using Error::Error;
};

class NonMonotone : public Error {
 public:
  using Error::Error;
};

}  // namespace deform

#pragma once

#include <stdexcept>

namespace trinomial {

// Base of every numeric failure thrown by the library. Precondition misuse
// (bad degrees, malformed parameter lists, zero denominators) throws
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma evaluated at a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Series argument outside its circle of convergence.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Term cap exhausted with the tail estimate still above tolerance.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// |t| too close to (or beyond) the series convergence radius.
class OutsideRadiusError : public Error {
 public:
  using Error::Error;
};

// A computed root fails its residual certificate.
class ResidualError : public Error {
 public:
  using Error::Error;
};

// A reciprocal-transform input has a root at the origin.
class ZeroRootError : public Error {
 public:
  using Error::Error;
};

// Root-set comparison with mismatched sizes.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace trinomial

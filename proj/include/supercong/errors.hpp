#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

// Base for every domain failure raised by the library. Callers that only need
// to distinguish "our" errors from std::bad_alloc and friends catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p divides a value that has to be inverted modulo p^k.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// A rational argument does not lie in Z_p (p divides its denominator), or a
// value with negative valuation was asked for a residue.
class NotPAdic : public Error {
 public:
  using Error::Error;
};

// The tracked p-adic precision is smaller than what the caller requested.
class PrecisionLoss : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class NormalizationConflict : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class PrecisionUnreachable : public Error {
 public:
  using Error::Error;
};

// Report files that cannot be written or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace supercong

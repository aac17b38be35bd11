#pragma once

#include <stdexcept>
#include <string>

namespace spinent {

/// Base class of every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NormalizationError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientAtoms : public Error {
 public:
  using Error::Error;
};

/// Raised when the mean pseudo-spin vector vanishes and the rotated frame
/// (with everything that depends on it) is undefined.
class DegenerateMeanSpin : public Error {
 public:
  using Error::Error;
};

class InvalidQuantumNumber : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DimensionCap : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class WrongAtomCount : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinent

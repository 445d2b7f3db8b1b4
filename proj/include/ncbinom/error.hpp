#pragma once

#include <stdexcept>
#include <string>

namespace ncb {

// All library failures derive from Error so the CLI can map them to exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionNotExact : public Error {
public:
  using Error::Error;
};

class RingMismatch : public Error {
public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
public:
  using Error::Error;
};

class EmptyWord : public Error {
public:
  using Error::Error;
};

class NoFactorization : public Error {
public:
  using Error::Error;
};

class OrderViolation : public Error {
public:
  using Error::Error;
};

class UnsupportedRing : public Error {
public:
  using Error::Error;
};

class NotUnital : public Error {
public:
  using Error::Error;
};

class NotASigmaDerivation : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// Raised when a computed quantity contradicts an identity the engine relies on
// (non-integral Lyndon coefficient, surviving short monomial in char p, ...).
class TheoremViolation : public Error {
public:
  using Error::Error;
};

} // namespace ncb

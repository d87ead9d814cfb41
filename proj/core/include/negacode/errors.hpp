#pragma once

#include <stdexcept>
#include <string>

namespace negacode {

// Base class for every library error, so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ring: inverse() of a non-unit element.
class NonUnit : public Error {
 public:
  using Error::Error;
};

// poly: residue arithmetic across different ring/modulus tags or lengths.
class MixedRings : public Error {
 public:
  using Error::Error;
};

// poly: phi_negate on a residue of even length (the x -> -x swap between
// moduli x^n-1 and x^n+1 is a bijection only for odd n).
class EvenLength : public Error {
 public:
  using Error::Error;
};

// poly: division by a polynomial whose leading coefficient is not a unit.
class NonMonicDivisor : public Error {
 public:
  using Error::Error;
};

// factor: operations defined for odd lengths only.
class EvenN : public Error {
 public:
  using Error::Error;
};

// factor: a lift failed its trial-division verification.
class NotADivisor : public Error {
 public:
  using Error::Error;
};

// odd_codes: both generators of a two-generator presentation vanish.
class DegenerateGenerators : public Error {
 public:
  using Error::Error;
};

// pow2_codes: descriptor parameters outside their case's admissible range.
class BadParameters : public Error {
 public:
  using Error::Error;
};

// pow2_codes: length is not a supported power of two.
class UnsupportedLength : public Error {
 public:
  using Error::Error;
};

// oracle: generators of different lengths mixed in one closure.
class MixedLengths : public Error {
 public:
  using Error::Error;
};

// oracle/pow2_codes: exhaustive computation beyond the supported cap.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace negacode

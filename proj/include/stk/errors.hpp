#pragma once

#include <stdexcept>

namespace stk {

// Base of every domain error thrown by this library. Precondition violations
// (bad arguments to an operation) throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation left the 64-bit range instead of wrapping.
class Overflow : public Error {
 public:
  using Error::Error;
};

// numsgp
class NotCofinite : public Error {
 public:
  using Error::Error;
};
class NotAMember : public Error {
 public:
  using Error::Error;
};

// valideal
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};
class NotArithmeticFamily : public Error {
 public:
  using Error::Error;
};
class NoReductionFound : public Error {
 public:
  using Error::Error;
};

// truncmono
class ZeroIdeal : public Error {
 public:
  using Error::Error;
};
class InfiniteRing : public Error {
 public:
  using Error::Error;
};
class RingMismatch : public Error {
 public:
  using Error::Error;
};
class NotCoprime : public Error {
 public:
  using Error::Error;
};
class RepresentationFailure : public Error {
 public:
  using Error::Error;
};

// extcalc
class NotPrimaryForm : public Error {
 public:
  using Error::Error;
};
class TooFewGenerators : public Error {
 public:
  using Error::Error;
};
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};
class NonTermination : public Error {
 public:
  using Error::Error;
};

// certify
class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace stk

#pragma once

#include <stdexcept>

namespace neckslime {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: empty code, negative entry, unparsable literal, bad word.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operation needs a valid code (one without an invalid slime).
class InvalidCodeError : public Error {
 public:
  using Error::Error;
};

// A modular inverse was required but gcd(a, n) != 1.
class NotCoprimeError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition on the parameters does not hold
// (composite n where a prime is needed, period < n, even n for odd-only checks).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace neckslime

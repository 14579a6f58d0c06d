#pragma once

#include <stdexcept>
#include <string>

namespace skeinlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (q^k - q^-k) does not divide a polynomial exactly.
struct NotDivisible : Error {
  using Error::Error;
};

struct BoundExceeded : Error {
  using Error::Error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

// Colour list length differs from the companion's component count.
struct ComponentMismatch : Error {
  using Error::Error;
};

// Evaluator crossing/node budget exhausted.
struct ResourceLimit : Error {
  using Error::Error;
};

// A quotient that should lie in Z[q^{+-1}, a^{+-1}] does not.
struct DivisionNotExact : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace skeinlab

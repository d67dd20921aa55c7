#pragma once

#include <stdexcept>
#include <string>

namespace circsort {

/// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABijection : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};
struct ModulusMismatch : Error {
  using Error::Error;
};
struct NotCoprime : Error {
  using Error::Error;
};
struct NotPrime : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct DivisibilityViolated : Error {
  using Error::Error;
};
struct SolverFailed : Error {
  using Error::Error;
};
struct NotAPermutationPolynomial : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct InvalidWitness : Error {
  using Error::Error;
};

}  // namespace circsort

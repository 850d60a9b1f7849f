#ifndef MODSM_ERRORS_HPP
#define MODSM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modsm {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A symbol was used with two different arities.
struct ArityConflictError : Error {
  ArityConflictError(const std::string& symbol, int first, int second)
      : Error("arity conflict for '" + symbol + "': used with arity " +
              std::to_string(first) + " and arity " + std::to_string(second)),
        symbol(symbol), first_arity(first), second_arity(second) {}

  std::string symbol;
  int first_arity;
  int second_arity;
};

// Violation of a structural restriction (equality in a rule head,
// intensional predicate absent from a module's program, ...).
struct SemanticError : Error {
  using Error::Error;
};

// Herbrand universe cannot be built: no object constant, or positive-arity
// function symbols without a depth bound.
struct UniverseError : Error {
  using Error::Error;
};

// An enumeration would exceed the configured atom cap.
struct BoundError : Error {
  BoundError(std::size_t atoms, std::size_t limit)
      : Error("Herbrand base has " + std::to_string(atoms) +
              " atoms, exceeding the enumeration cap of " +
              std::to_string(limit) + " (raise --max-atoms to override)"),
        atoms(atoms), limit(limit) {}

  std::size_t atoms;
  std::size_t limit;
};

// A caller violated an operation's stated precondition.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace modsm

#endif  // MODSM_ERRORS_HPP

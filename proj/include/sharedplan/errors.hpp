#pragma once

#include <stdexcept>
#include <string>

namespace sharedplan {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// act-type used with a parameter count different from its fixed arity
struct ArityMismatch : Error {
  using Error::Error;
};

// fact violates a store invariant (singleton MB, group BEL, ...)
struct MalformedFact : Error {
  using Error::Error;
};

// recipe registered for a basic-level act-type, or vice versa
struct BasicLevelConflict : Error {
  using Error::Error;
};

// the identification-constraint table has no entry for an (act-type, position) pair
struct OracleGap : Error {
  using Error::Error;
};

// requirement key not present in a plan's ledger
struct UnknownKey : Error {
  using Error::Error;
};

// capability requirement asserted while the capability predicate is false
struct CapabilityNotDerivable : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

struct DuplicateTurn : ParseError {
  using ParseError::ParseError;
};

struct UndeclaredSymbol : ParseError {
  using ParseError::ParseError;
};

struct OutOfOrderTurn : Error {
  using Error::Error;
};

struct UnknownSpeaker : Error {
  using Error::Error;
};

}  // namespace sharedplan

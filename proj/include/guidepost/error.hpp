#pragma once

#include <stdexcept>
#include <string>

namespace guidepost {

// Base class for every failure raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

// Malformed text input; line is 1-based, 0 when unknown.
struct ParseError : Error {
  int line;
  ParseError(const std::string& what, int line_number)
      : Error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
};

// Instance exceeds a hard size cap of an exponential routine.
struct ResourceLimitError : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug.
struct InvariantError : Error {
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantError(message);
}

}  // namespace guidepost

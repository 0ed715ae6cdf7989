#pragma once

#include <stdexcept>
#include <string>

namespace ipcat {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Endpoints do not line up: composing f;g with tgt(f) != src(g), a structure
/// map with the wrong source or target, and so on.
struct TypeError : Error {
  using Error::Error;
};

/// Enumeration would exceed the configured hard cap on checked tuples.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Exhaustive enumeration was requested for an infinite hom-set.
struct NotEnumerable : Error {
  using Error::Error;
};

/// Functors or transformations whose categories do not match.
struct ShapeError : Error {
  using Error::Error;
};

struct NotInvertible : Error {
  using Error::Error;
};

/// A construction needs structure (e.g. a unitary structure) that is absent.
struct MissingStructure : Error {
  using Error::Error;
};

struct UnknownInstance : Error {
  using Error::Error;
};

/// Malformed input text, with a 1-based position.
struct ParseError : Error {
  /// Line 0 means the input had no position to report (e.g. an unreadable file).
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(line == 0 ? what : what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        message(what),
        line(line),
        column(column) {}

  std::string message;
  std::size_t line;
  std::size_t column;
};

}  // namespace ipcat

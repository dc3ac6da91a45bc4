#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairfold {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A value lies outside the domain of the requested operation
/// (zero coordinate under scheme f, zero modulus, rank below 1, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A request is structurally invalid (table origin incompatible with the
/// scheme, malformed command-line value, unreadable file, ...).
struct UsageError : Error {
  using Error::Error;
};

/// Malformed text input. `line` is the 1-based line number.
struct ParseError : Error {
  std::size_t line;

  ParseError(std::size_t line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace pairfold

#pragma once

#include <stdexcept>
#include <string>

namespace treemono {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument (out-of-range letter, degree mismatch, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(what) {}
};

// A configured cap (tree level, trial budget) was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(what) {}
};

// Input is outside the supported fragment (e.g. recursion words with
// ambient constants).
class UnsupportedInputError : public Error {
 public:
  explicit UnsupportedInputError(const std::string& what) : Error(what) {}
};

// Textual input failed to parse; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Structural violation of a domain invariant (portrait not of the
// required shape, machine not closed, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace treemono

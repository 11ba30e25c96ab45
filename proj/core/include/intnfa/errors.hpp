#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intnfa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: unknown action tokens, undeclared names, bad options.
class InputError : public Error {
public:
  using Error::Error;
};

/// Syntax error in a model file, with a 1-based source position.
class ParseError : public InputError {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured cap (states, frontier size, subsets) was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// The compositional translation met an operator it cannot map to an NFA operation.
class UnsupportedScope : public Error {
public:
  UnsupportedScope(const std::string& message, std::string position)
      : Error(message + " at position " + position), position_(std::move(position)) {}

  const std::string& position() const noexcept { return position_; }

private:
  std::string position_;
};

/// No accepted word exists in the requested length window.
class Unsatisfiable : public Error {
public:
  using Error::Error;
};

/// Random extensions never produced a failing trace.
class CannotFalsify : public Error {
public:
  using Error::Error;
};

}  // namespace intnfa

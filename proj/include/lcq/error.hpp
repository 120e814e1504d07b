#pragma once

#include <stdexcept>
#include <string>

namespace lcq {

// Shapes of two operands do not fit together.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string &what)
      : std::invalid_argument(what) {}
};

// Well-formed but semantically invalid input (bad index, missing matrix...).
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string &what) : std::invalid_argument(what) {}
};

// Malformed input document. Carries the 1-based line/column when known.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line = 0,
             std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// A derivation chain whose recorded inputs contradict each other.
class InconsistencyError : public std::logic_error {
public:
  explicit InconsistencyError(const std::string &what)
      : std::logic_error(what) {}
};

} // namespace lcq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multinet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments does not hold (mismatched grounds, unknown port, ...).
struct DomainError : Error {
  using Error::Error;
};

/// An enumeration would exceed the configured bound.
struct ResourceError : Error {
  using Error::Error;
};

/// Gluing two hypergraphs broke linearity or used a malformed interface.
struct CompositionError : Error {
  using Error::Error;
};

/// A method could not be turned into a structure.
struct CompileError : Error {
  using Error::Error;
};

/// An expansion was requested on a site that does not expand. `condition`
/// is 'a', 'b' or 'c' after the characterization it violated.
class ExpansionError : public Error {
 public:
  ExpansionError(char condition, const std::string& what)
      : Error(what), condition_(condition) {}
  char condition() const noexcept { return condition_; }

 private:
  char condition_;
};

/// Syntax or semantic error in program text, with 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace multinet

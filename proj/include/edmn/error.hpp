#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edmn {

// Base of every exception thrown by the engine. Semantic outcomes such as an
// undefined decision are never exceptions; they are returned in-band.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VocabularyError : public Error {
 public:
  using Error::Error;
};

class FormulaError : public Error {
 public:
  using Error::Error;
};

// Raised when an exhaustive enumeration would exceed the configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what, std::size_t required, std::size_t cap)
      : Error(what + ": " + std::to_string(required) + " exceeds enumeration cap " +
              std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t required_;
  std::size_t cap_;
};

class TheoryError : public Error {
 public:
  using Error::Error;
};

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

class ModelError : public Error {
 public:
  using Error::Error;
};

class UtilityError : public Error {
 public:
  using Error::Error;
};

class CompileError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

}  // namespace edmn

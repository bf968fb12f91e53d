#pragma once

#include <stdexcept>
#include <string>

namespace dimspan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke an operation's precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration or argument value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Label not present in a dictionary.
class DictionaryMiss : public Error {
 public:
  using Error::Error;
};

/// Value outside the range the integer codec can represent.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Compressed block that cannot be decoded.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// The brute-force oracle refused an input that is too large.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dimspan

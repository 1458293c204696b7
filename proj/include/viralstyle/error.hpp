#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace viralstyle {

/// Base class for all library errors. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (lexicon, record file, ...). Carries a 1-based line
/// number when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  explicit ParseError(const std::string& message) : Error(message), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Structurally valid input that violates a contract (empty corpus, zero
/// variance, unknown label, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace viralstyle

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jcalc {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a 0-based byte offset into the
// text handed to the parser; `line` is 1-based when parsing files, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::size_t line = 0)
      : Error(format(message, position, line)), message_(message), position_(position), line_(line) {}

  // The message without the location prefix.
  const std::string& message() const { return message_; }
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t position, std::size_t line) {
    std::string where = line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(position + 1)
                                 : "position " + std::to_string(position);
    return "parse error at " + where + ": " + message;
  }

  std::string message_;
  std::size_t position_;
  std::size_t line_;
};

class RankMismatch : public Error {
 public:
  RankMismatch(int lhs, int rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

// An operation was called outside its domain (not 2-connected, not in the
// required filtration level, ...). The message carries the offending value.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Fixed-point iteration of an acyclic system failed to settle.
class NotStabilized : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Seeing one of these is a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Fixed-width series coefficients would leave the safe int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace jcalc

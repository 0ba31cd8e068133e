#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace npcount {

/// Failure of a numerical routine to deliver its stated accuracy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation requested at (or numerically on top of) a pole.
class PoleError : public NumericError {
 public:
  using NumericError::NumericError;
};

class ConvergenceError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// A truncated series did not reach its cutoff within the iteration budget.
class TruncationError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// An internal invariant failed; always indicates a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace npcount

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace argeq {

/// Bad user input: malformed files, unknown arguments, out-of-range values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text formats; `line()` is 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The brute-force oracles refuse frameworks larger than the configured cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by operations only defined on acyclic (sub)frameworks.
class CycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric solver did not settle within its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : std::runtime_error(what), last_residual_(last_residual) {}

  double last_residual() const { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace argeq

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motifspectra {

/// Parameters violate a documented precondition (divisibility, ranges, k > n).
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data is malformed (non-binary adjacency, mismatched lengths).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A plug-in estimate has an empty or zero denominator.
class UndefinedEstimate : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The eigensolver did not reach the requested accuracy.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Text input could not be parsed; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace motifspectra

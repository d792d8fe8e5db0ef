#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Malformed index or expression text.
class SyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index whose defining series does not converge.
class DivergentIndexError : public DomainError {
 public:
  explicit DivergentIndexError(const std::string& index) : DomainError("divergent index: " + index) {}
};

/// Request that would exceed a resource cap (exact partial sums, table sizes).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical method failed to reach its convergence criterion.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A built-in reduction rule failed its numeric self-check.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownSuiteError : public std::invalid_argument {
 public:
  explicit UnknownSuiteError(const std::string& name) : std::invalid_argument("unknown suite: " + name) {}
};

}  // namespace mzv

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eulerquad {

/// A caller-side contract was violated (a >= b, n == 0, tolerance <= 0, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Severity { Error, Warning };

/// Location and message of a parse problem. [begin, end) is a byte range
/// that always lies inside the source text.
struct ParseDiagnostic {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string message;
  Severity severity = Severity::Error;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic diagnostic);
  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

/// Evaluating an expression left the natural domain of one of its nodes
/// (sqrt/ln of a negative, division by zero, overflow to inf or NaN).
class EvalError : public std::runtime_error {
 public:
  EvalError(std::string node, double x, std::string reason);
  const std::string& node() const noexcept { return node_; }
  double x() const noexcept { return x_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string node_;
  double x_;
  std::string reason_;
};

/// EvalError raised while sampling node k of an Euler-sum grid.
class NodeEvalError : public EvalError {
 public:
  NodeEvalError(const EvalError& cause, std::int64_t k);
  std::int64_t k() const noexcept { return k_; }

 private:
  std::int64_t k_;
};

/// The derivative bound needed by the FTC check does not exist on (a,b).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Lagrange intermediate point could not be located numerically.
class NotLocatedError : public std::runtime_error {
 public:
  NotLocatedError(double scan_min, double scan_max, double target);
  double scan_min() const noexcept { return scan_min_; }
  double scan_max() const noexcept { return scan_max_; }
  double target() const noexcept { return target_; }

 private:
  double scan_min_;
  double scan_max_;
  double target_;
};

}  // namespace eulerquad

#include "eulerquad/errors.hpp"

#include <sstream>

namespace eulerquad {

namespace {

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

ParseError::ParseError(ParseDiagnostic diagnostic)
    : std::runtime_error("parse error at byte " + std::to_string(diagnostic.begin) + ": " + diagnostic.message),
      diagnostic_(std::move(diagnostic)) {}

EvalError::EvalError(std::string node, double x, std::string reason)
    : std::runtime_error("evaluation error: " + reason + " in " + node + " at x = " + number(x)),
      node_(std::move(node)),
      x_(x),
      reason_(std::move(reason)) {}

NodeEvalError::NodeEvalError(const EvalError& cause, std::int64_t k)
    : EvalError(cause.node(), cause.x(), cause.reason() + " (grid node k = " + std::to_string(k) + ")"), k_(k) {}

NotLocatedError::NotLocatedError(double scan_min, double scan_max, double target)
    : std::runtime_error("Lagrange point not located: derivative ranged over [" + number(scan_min) + ", " +
                         number(scan_max) + "] on the scan grid, target " + number(target)),
      scan_min_(scan_min),
      scan_max_(scan_max),
      target_(target) {}

}  // namespace eulerquad

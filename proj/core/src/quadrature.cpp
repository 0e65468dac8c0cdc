#include "eulerquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "eulerquad/errors.hpp"

namespace eulerquad {

GridSpec::GridSpec(double a, double b, std::int64_t n) : a_(a), b_(b), n_(n), dx_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw PreconditionError("interval endpoints must be finite");
  if (!(a < b)) throw PreconditionError("a must be < b");
  if (n < 1) throw PreconditionError("n must be >= 1");
  dx_ = (b - a) / static_cast<double>(n);
}

std::string_view to_string(PartitionRule rule) noexcept {
  switch (rule) {
    case PartitionRule::Left: return "left";
    case PartitionRule::Right: return "right";
    case PartitionRule::Midpoint: return "midpoint";
  }
  return "?";
}

std::optional<PartitionRule> parse_rule(std::string_view text) noexcept {
  if (text == "left") return PartitionRule::Left;
  if (text == "right") return PartitionRule::Right;
  if (text == "midpoint") return PartitionRule::Midpoint;
  return std::nullopt;
}

std::string_view to_string(StopReason reason) noexcept {
  return reason == StopReason::ToleranceMet ? "ToleranceMet" : "MaxNReached";
}

double sample_point(const GridSpec& grid, PartitionRule rule, std::int64_t k) noexcept {
  switch (rule) {
    case PartitionRule::Left: return grid.node(k);
    case PartitionRule::Right: return grid.node(k + 1);
    case PartitionRule::Midpoint: return (grid.node(k) + grid.node(k + 1)) / 2.0;
  }
  return grid.node(k);
}

EulerSumResult euler_sum(const Expr& f, const GridSpec& grid, PartitionRule rule, Execution exec) {
  const double total = compensated_sum(
      grid.n(),
      [&](std::int64_t k) {
        try {
          return eval(f, sample_point(grid, rule, k));
        } catch (const EvalError& e) {
          throw NodeEvalError(e, k);
        }
      },
      exec);
  return EulerSumResult{grid, rule, grid.dx() * total, grid.n()};
}

ConvergenceReport integrate(const Expr& f, double a, double b, PartitionRule rule, double tolerance,
                            std::int64_t n0, std::int64_t max_n, Execution exec) {
  if (!(tolerance > 0.0)) throw PreconditionError("tolerance must be > 0");
  if (n0 < 1) throw PreconditionError("n0 must be >= 1");
  if (n0 > max_n) throw PreconditionError("n0 must be <= max_n");

  ConvergenceReport report;
  report.tolerance = tolerance;
  std::int64_t n = n0;
  double previous = euler_sum(f, GridSpec(a, b, n), rule, exec).value;
  report.samples.push_back({n, previous});
  while (n <= max_n / 2) {
    n *= 2;
    const double current = euler_sum(f, GridSpec(a, b, n), rule, exec).value;
    report.samples.push_back({n, current});
    if (std::abs(current - previous) <= tolerance) {
      report.converged = true;
      report.stop_reason = StopReason::ToleranceMet;
      break;
    }
    previous = current;
  }
  report.estimate = report.samples.back().value;
  return report;
}

double a_priori_bound(double M, double a, double b, std::int64_t n) {
  if (!(M >= 0.0)) throw PreconditionError("M must be >= 0");
  if (!(a < b)) throw PreconditionError("a must be < b");
  if (n < 1) throw PreconditionError("n must be >= 1");
  const double width = b - a;
  return M * width * width / (2.0 * static_cast<double>(n));
}

FtcVerdict verify_ftc(const Expr& F, double a, double b, std::span<const std::int64_t> n_list,
                      std::optional<double> M_override, Execution exec) {
  if (!(a < b)) throw PreconditionError("a must be < b");
  const Expr f = differentiate(F);

  FtcVerdict verdict;
  if (M_override) {
    if (!(*M_override >= 0.0)) throw PreconditionError("M must be >= 0");
    verdict.M_used = *M_override;
  } else {
    const Expr df = differentiate(f);
    try {
      verdict.M_used = sup_abs(df, a, b, kFtcSupSamples);
    } catch (const EvalError& e) {
      throw HypothesisError("FTC hypothesis violated: F'' = " + print(df) +
                            " is not bounded on [a, b] (" + e.what() + ")");
    }
    verdict.M_estimated = true;
  }

  verdict.exact = eval(F, b) - eval(F, a);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (const std::int64_t n : n_list) {
    const double sum = euler_sum(f, GridSpec(a, b, n), PartitionRule::Left, exec).value;
    const double error = std::abs(sum - verdict.exact);
    const double bound = a_priori_bound(verdict.M_used, a, b, n);
    // The bound can be attained exactly (F = x^2/2), so allow last-bit noise.
    const double slack = 64.0 * kEps * std::max({1.0, std::abs(sum), std::abs(verdict.exact)});
    if (error > bound + slack) verdict.all_within_bound = false;
    verdict.rows.push_back({n, sum, error, bound});
  }
  return verdict;
}

RuleDifference rule_difference(const Expr& f, const GridSpec& grid, Execution exec) {
  const double right = euler_sum(f, grid, PartitionRule::Right, exec).value;
  const double left = euler_sum(f, grid, PartitionRule::Left, exec).value;
  const double predicted = (eval(f, grid.b()) - eval(f, grid.a())) * grid.dx();
  return {right - left, predicted};
}

double telescope_check(const Expr& F, const GridSpec& grid, Execution exec) {
  const double sum = compensated_sum(
      grid.n(),
      [&](std::int64_t k) {
        try {
          return eval(F, grid.node(k + 1)) - eval(F, grid.node(k));
        } catch (const EvalError& e) {
          throw NodeEvalError(e, k);
        }
      },
      exec);
  return sum - (eval(F, grid.b()) - eval(F, grid.a()));
}

}  // namespace eulerquad

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eulerquad/expr.hpp"
#include "eulerquad/summation.hpp"

namespace eulerquad {

/// Equally spaced subdivision of [a, b] into n cells.
class GridSpec {
 public:
  /// Throws PreconditionError unless a < b (both finite) and n >= 1.
  GridSpec(double a, double b, std::int64_t n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::int64_t n() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }

  /// x_k = a + k * dx, computed from k directly (no running accumulation).
  double node(std::int64_t k) const noexcept { return a_ + static_cast<double>(k) * dx_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  double a_;
  double b_;
  std::int64_t n_;
  double dx_;
};

enum class PartitionRule { Left, Right, Midpoint };

std::string_view to_string(PartitionRule rule) noexcept;
/// Accepts "left", "right", "midpoint" (case-sensitive).
std::optional<PartitionRule> parse_rule(std::string_view text) noexcept;

/// Point at which cell k is sampled under `rule`.
double sample_point(const GridSpec& grid, PartitionRule rule, std::int64_t k) noexcept;

struct EulerSumResult {
  GridSpec grid;
  PartitionRule rule;
  double value;
  std::int64_t evaluations;
};

/// n-th Euler sum dx * sum_k f(sample_k), compensated and deterministic for
/// any Execution. Throws NodeEvalError naming the failing k.
EulerSumResult euler_sum(const Expr& f, const GridSpec& grid, PartitionRule rule = PartitionRule::Left,
                         Execution exec = Execution::from_environment());

enum class StopReason { ToleranceMet, MaxNReached };

std::string_view to_string(StopReason reason) noexcept;

struct ConvergenceSample {
  std::int64_t n;
  double value;
};

struct ConvergenceReport {
  std::vector<ConvergenceSample> samples;
  double estimate = 0.0;
  bool converged = false;
  StopReason stop_reason = StopReason::MaxNReached;
  double tolerance = 0.0;
};

/// Euler sums for n = n0, 2 n0, 4 n0, ... while n <= max_n, stopping once two
/// successive sums differ by at most `tolerance`. Non-convergence is
/// reported (converged = false), not thrown.
ConvergenceReport integrate(const Expr& f, double a, double b, PartitionRule rule, double tolerance,
                            std::int64_t n0, std::int64_t max_n, Execution exec = Execution::from_environment());

/// M (b - a)^2 / (2 n): bound on |I - I_n| for left Euler sums of f when
/// |f'| <= M on (a, b).
double a_priori_bound(double M, double a, double b, std::int64_t n);

struct FtcRow {
  std::int64_t n;
  double sum;
  double abs_error;
  double bound;
};

struct FtcVerdict {
  double exact = 0.0;
  std::vector<FtcRow> rows;
  bool all_within_bound = true;
  double M_used = 0.0;
  /// True when M came from sup_abs sampling rather than the caller; bound
  /// violations are then diagnostics only.
  bool M_estimated = false;
};

inline constexpr int kFtcSupSamples = 4097;

/// Checks F(b) - F(a) against left Euler sums of f = F' for every n in
/// n_list, alongside M (b - a)^2 / (2 n). M defaults to sup_abs(F'') on
/// [a, b]. Throws HypothesisError if F'' cannot be bounded there.
FtcVerdict verify_ftc(const Expr& F, double a, double b, std::span<const std::int64_t> n_list,
                      std::optional<double> M_override = std::nullopt,
                      Execution exec = Execution::from_environment());

struct RuleDifference {
  double right_minus_left;
  /// (f(b) - f(a)) dx, what the telescoping identity says the gap must be.
  double predicted;
};

RuleDifference rule_difference(const Expr& f, const GridSpec& grid, Execution exec = Execution::from_environment());

/// sum_{k<n} (F(x_{k+1}) - F(x_k)) - (F(b) - F(a)); pure rounding residue.
double telescope_check(const Expr& F, const GridSpec& grid, Execution exec = Execution::from_environment());

}  // namespace eulerquad

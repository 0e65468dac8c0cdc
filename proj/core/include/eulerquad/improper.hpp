#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eulerquad/expr.hpp"
#include "eulerquad/quadrature.hpp"

namespace eulerquad {

enum class SingularEnd { Left, Right };

std::string_view to_string(SingularEnd end) noexcept;
std::optional<SingularEnd> parse_singular_end(std::string_view text) noexcept;

struct ImproperConfig {
  /// Strictly decreasing, positive, each below b - a.
  std::vector<double> epsilons = default_epsilons();
  double inner_tolerance = 1e-4;
  double stall_tolerance = 1e-3;
  std::int64_t n0 = 10;
  std::int64_t max_n = 10'000'000;
  PartitionRule rule = PartitionRule::Left;

  /// 1e-1, 1e-2, ..., 1e-8.
  static std::vector<double> default_epsilons();
};

struct ImproperRow {
  double epsilon;
  double value;
  bool inner_converged;
};

struct ImproperReport {
  double a = 0.0;
  double b = 0.0;
  SingularEnd singular_end = SingularEnd::Left;
  std::vector<ImproperRow> rows;
  double extrapolated = 0.0;
  bool converged = false;
};

/// Integrates f on [a + eps, b] (or [a, b - eps]) with the doubling driver for
/// each eps in the config. The extrapolated value is the last row whose inner
/// integration converged. The report converges when every row did and the
/// last two rows agree within the stall tolerance.
ImproperReport improper_integrate(const Expr& f, double a, double b, SingularEnd singular_end,
                                  const ImproperConfig& config = {},
                                  Execution exec = Execution::from_environment());

struct DirectRow {
  std::int64_t n;
  double value;
  /// M (b-a)^2 / (2n) when sup |f'| could be estimated on [a, b].
  std::optional<double> bound;
};

struct DirectVsImproper {
  std::vector<DirectRow> direct;
  /// Estimated sup |f'| on [a, b]; empty when f' is unbounded or undefined.
  std::optional<double> M;
  ImproperReport improper;
  /// last direct value - improper extrapolation
  double difference = 0.0;
};

/// Decade grid n = 10, 100, ..., 10^6 used for the direct trail.
std::vector<std::int64_t> default_direct_ns();

/// Direct left Euler sums on the whole [a, b] next to the eps-limit with a
/// singular left end.
DirectVsImproper direct_vs_improper(const Expr& f, double a, double b, const ImproperConfig& config = {},
                                    std::span<const std::int64_t> direct_ns = {},
                                    Execution exec = Execution::from_environment());

}  // namespace eulerquad

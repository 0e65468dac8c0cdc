#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eulerquad/qsqrt2.hpp"

namespace eulerquad {

/// Exact left Euler sum of the indicator of the rationals on [a, b].
struct IndicatorSumResult {
  QSqrt2 a;
  QSqrt2 b;
  std::int64_t n = 0;
  std::int64_t rational_node_count = 0;
  QSqrt2 value;
};

/// Places x_k = a + k (b - a)/n exactly for k = 0..n-1, counts the rational
/// nodes and returns (b - a)/n * count. Throws PreconditionError unless
/// a < b and n >= 1.
IndicatorSumResult indicator_euler_sum(const QSqrt2& a, const QSqrt2& b, std::int64_t n);

struct AdditivityRow {
  std::int64_t n;
  QSqrt2 full;
  QSqrt2 left;
  QSqrt2 right;
  /// full - (left + right)
  QSqrt2 defect;
};

struct AdditivityReport {
  QSqrt2 split;
  std::vector<AdditivityRow> rows;
};

/// Indicator sums over [0, 1], [0, split] and [split, 1] for each n.
/// Throws PreconditionError unless 0 < split < 1.
AdditivityReport additivity_demo(const QSqrt2& split, std::span<const std::int64_t> n_sequence);

}  // namespace eulerquad

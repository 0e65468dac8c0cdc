#include "eulerquad/indicator.hpp"

#include "eulerquad/errors.hpp"

namespace eulerquad {

IndicatorSumResult indicator_euler_sum(const QSqrt2& a, const QSqrt2& b, std::int64_t n) {
  if (!(a < b)) throw PreconditionError("a must be < b");
  if (n < 1) throw PreconditionError("n must be >= 1");

  const QSqrt2 step = (b - a) / QSqrt2(Rational(n));
  std::int64_t count = 0;
  QSqrt2 node = a;
  for (std::int64_t k = 0; k < n; ++k) {
    if (k > 0) node = a + step * QSqrt2(Rational(k));
    if (node.is_rational()) ++count;
  }
  return IndicatorSumResult{a, b, n, count, step * QSqrt2(Rational(count))};
}

AdditivityReport additivity_demo(const QSqrt2& split, std::span<const std::int64_t> n_sequence) {
  const QSqrt2 zero;
  const QSqrt2 one(Rational(1));
  if (!(zero < split && split < one)) throw PreconditionError("split must lie strictly inside (0, 1)");

  AdditivityReport report{split, {}};
  report.rows.reserve(n_sequence.size());
  for (const std::int64_t n : n_sequence) {
    QSqrt2 full = indicator_euler_sum(zero, one, n).value;
    QSqrt2 left = indicator_euler_sum(zero, split, n).value;
    QSqrt2 right = indicator_euler_sum(split, one, n).value;
    QSqrt2 defect = full - (left + right);
    report.rows.push_back({n, std::move(full), std::move(left), std::move(right), std::move(defect)});
  }
  return report;
}

}  // namespace eulerquad

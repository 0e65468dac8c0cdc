#pragma once

#include <cstdint>
#include <functional>

namespace eulerquad {

/// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double v) noexcept {
    const double y = v - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }
  double compensation() const noexcept { return compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Parallelism cap for the engine. threads == 0 or 1 means sequential.
struct Execution {
  unsigned threads = 0;

  /// Reads EULERQUAD_THREADS; unset or unparsable means hardware concurrency.
  static Execution from_environment();
};

/// Terms per chunk. Chunk boundaries depend only on the term count, never
/// on the thread count, so the result is bit-identical for any Execution.
inline constexpr std::int64_t kSumChunk = 1 << 14;

/// Compensated sum of term(k) for k in [0, count). Each chunk is summed in
/// ascending k with Kahan compensation; chunk partials are then combined
/// in chunk order with Kahan compensation. If term throws, the exception
/// from the smallest failing k is rethrown.
double compensated_sum(std::int64_t count, const std::function<double(std::int64_t)>& term,
                       Execution exec = Execution::from_environment());

}  // namespace eulerquad

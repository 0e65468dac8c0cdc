#include "eulerquad/summation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace eulerquad {

Execution Execution::from_environment() {
  if (const char* env = std::getenv("EULERQUAD_THREADS")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string(env).size()) return Execution{static_cast<unsigned>(v)};
    } catch (const std::exception&) {
    }
  }
  return Execution{std::thread::hardware_concurrency()};
}

namespace {

struct Partial {
  double sum = 0.0;
  double compensation = 0.0;
  std::exception_ptr error;
};

void sum_chunk(std::int64_t chunk, std::int64_t count, const std::function<double(std::int64_t)>& term,
               Partial& out) {
  const std::int64_t begin = chunk * kSumChunk;
  const std::int64_t end = std::min(count, begin + kSumChunk);
  KahanSum acc;
  try {
    for (std::int64_t k = begin; k < end; ++k) acc.add(term(k));
  } catch (...) {
    out.error = std::current_exception();
    return;
  }
  out.sum = acc.value();
  out.compensation = acc.compensation();
}

}  // namespace

double compensated_sum(std::int64_t count, const std::function<double(std::int64_t)>& term, Execution exec) {
  if (count <= 0) return 0.0;
  const std::int64_t chunks = (count + kSumChunk - 1) / kSumChunk;
  std::vector<Partial> partials(static_cast<std::size_t>(chunks));

  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(exec.threads, chunks));
  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c) {
      sum_chunk(c, count, term, partials[c]);
      if (partials[c].error) break;
    }
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::int64_t c = next++; c < chunks; c = next++) sum_chunk(c, count, term, partials[c]);
      });
    }
  }

  KahanSum total;
  for (const Partial& p : partials) {
    if (p.error) std::rethrow_exception(p.error);
    total.add(p.sum);
    total.add(-p.compensation);
  }
  return total.value();
}

}  // namespace eulerquad

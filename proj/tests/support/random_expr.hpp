#pragma once

#include <array>
#include <random>

#include "eulerquad/expr.hpp"

namespace eulerquad::testing {

/// Random expression trees over the full node set, depth <= max_depth.
class ExprGenerator {
 public:
  explicit ExprGenerator(std::uint64_t seed) : rng_(seed) {}

  Expr operator()(int max_depth) { return gen(max_depth); }

  /// Smooth trees built only from x, constants, +, -, *, sin, cos, exp and
  /// non-negative integer powers; defined everywhere on the real line.
  Expr smooth(int max_depth) { return gen_smooth(max_depth); }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937_64& engine() { return rng_; }

 private:
  Expr leaf() {
    static constexpr std::array<double, 10> kConstants{-3, -2, -1, 0, 1, 2, 3, 0.5, 1.5, 0.1};
    if (pick(10) < 6) return Expr::variable();
    return Expr::constant(kConstants[pick(static_cast<int>(kConstants.size()))]);
  }

  Expr gen(int depth) {
    if (depth <= 0 || pick(10) < 2) return leaf();
    static constexpr std::array<double, 7> kExponents{2, 3, -1, 0.5, 1.5, -0.5, 4};
    const int d = depth - 1;
    switch (pick(12)) {
      case 0: return -gen(d);
      case 1: return gen(d) + gen(d);
      case 2: return gen(d) - gen(d);
      case 3: return gen(d) * gen(d);
      case 4: return gen(d) / gen(d);
      case 5: return Expr::pow(gen(d), kExponents[pick(static_cast<int>(kExponents.size()))]);
      case 6: return Expr::sqrt(gen(d));
      case 7: return Expr::sin(gen(d));
      case 8: return Expr::cos(gen(d));
      case 9: return Expr::exp(gen(d));
      case 10: return Expr::ln(gen(d));
      default: return gen(d) * gen(d);
    }
  }

  Expr gen_smooth(int depth) {
    if (depth <= 0 || pick(10) < 2) return leaf();
    const int d = depth - 1;
    switch (pick(7)) {
      case 0: return gen_smooth(d) + gen_smooth(d);
      case 1: return gen_smooth(d) - gen_smooth(d);
      case 2: return gen_smooth(d) * Expr::constant(uniform(-2.0, 2.0));
      case 3: return Expr::sin(gen_smooth(d));
      case 4: return Expr::cos(gen_smooth(d));
      case 5: return Expr::pow(gen_smooth(d), static_cast<double>(pick(3) + 1));
      default: return Expr::exp(Expr::sin(gen_smooth(d)));
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace eulerquad::testing

#pragma once

// Property checks for the expression core, shared by the unit tests and the
// acceptance suite.

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "eulerquad/errors.hpp"
#include "eulerquad/expr.hpp"
#include "eulerquad/parse.hpp"
#include "oracles.hpp"
#include "random_expr.hpp"

namespace eulerquad::testing {

struct PropertyStats {
  int expressions = 0;
  /// Expressions for which at least one point was actually compared.
  int exercised = 0;
  long comparisons = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline std::optional<double> try_eval(const Expr& f, double x) {
  try {
    return eval(f, x);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

inline bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

/// parse(print(e)) must evaluate bit-identically to e (including failing at
/// the same points).
inline PropertyStats check_round_trip(std::uint64_t seed, int count, int depth, int points) {
  ExprGenerator gen(seed);
  PropertyStats stats;
  for (int i = 0; i < count; ++i) {
    const Expr e = gen(depth);
    ++stats.expressions;
    const std::string text = print(e);
    Expr back;
    try {
      back = parse(text);
    } catch (const ParseError& err) {
      stats.fail("printed form does not parse: " + text + " (" + err.what() + ")");
      continue;
    }
    bool any = false;
    for (int p = 0; p < points; ++p) {
      const double x = gen.uniform(-3.0, 3.0);
      const auto lhs = try_eval(e, x);
      const auto rhs = try_eval(back, x);
      if (lhs.has_value() != rhs.has_value() || (lhs && !same_bits(*lhs, *rhs))) {
        stats.fail("round trip mismatch for " + text + " at x=" + std::to_string(x));
        break;
      }
      if (lhs) {
        any = true;
        ++stats.comparisons;
      }
    }
    if (any) ++stats.exercised;
  }
  return stats;
}

/// |f'(x) - central_diff(f, x, 1e-6)| <= 1e-4 (1 + |f'(x)|) at random points.
/// Points where the difference quotient itself is unreliable (its h and 2h
/// values disagree) are skipped; they carry no information about f'.
inline PropertyStats check_derivatives(std::uint64_t seed, int count, int depth, int points) {
  constexpr double h = 1e-6;
  ExprGenerator gen(seed);
  PropertyStats stats;
  for (int i = 0; i < count; ++i) {
    const Expr f = gen(depth);
    const Expr df = differentiate(f);
    ++stats.expressions;
    bool any = false;
    for (int p = 0; p < points; ++p) {
      const double x = gen.uniform(-3.0, 3.0);
      const auto d = try_eval(df, x);
      if (!d) continue;
      std::optional<double> cd1, cd2;
      try {
        auto fx = [&](double t) { return eval(f, t); };
        cd1 = central_diff(fx, x, h);
        cd2 = central_diff(fx, x, 2 * h);
      } catch (const EvalError&) {
        continue;
      }
      if (!std::isfinite(*cd1) || !std::isfinite(*cd2)) continue;
      if (std::abs(*cd1 - *cd2) > 1e-6 * (1.0 + std::abs(*cd1))) continue;
      any = true;
      ++stats.comparisons;
      if (std::abs(*d - *cd1) > 1e-4 * (1.0 + std::abs(*d))) {
        stats.fail("derivative mismatch for " + print(f) + " at x=" + std::to_string(x) + ": symbolic " +
                   std::to_string(*d) + " vs difference quotient " + std::to_string(*cd1));
        break;
      }
    }
    if (any) ++stats.exercised;
  }
  return stats;
}

/// simplify(f) agrees with f to 1e-12 relative wherever f is defined.
inline PropertyStats check_simplify(std::uint64_t seed, int count, int depth, int points) {
  ExprGenerator gen(seed);
  PropertyStats stats;
  for (int i = 0; i < count; ++i) {
    const Expr f = gen(depth);
    const Expr s = simplify(f);
    ++stats.expressions;
    bool any = false;
    for (int p = 0; p < points; ++p) {
      const double x = gen.uniform(-3.0, 3.0);
      const auto v = try_eval(f, x);
      if (!v) continue;
      const auto w = try_eval(s, x);
      any = true;
      ++stats.comparisons;
      if (!w || std::abs(*v - *w) > 1e-12 * std::abs(*v)) {
        stats.fail("simplify changed the value of " + print(f) + " at x=" + std::to_string(x));
        break;
      }
    }
    if (any) ++stats.exercised;
  }
  return stats;
}

/// differentiate(Constant c) is identically zero.
inline PropertyStats check_constant_derivative(std::uint64_t seed, int count) {
  ExprGenerator gen(seed);
  PropertyStats stats;
  for (int i = 0; i < count; ++i) {
    const double c = gen.uniform(-1e6, 1e6);
    const Expr d = differentiate(Expr::constant(c));
    ++stats.expressions;
    ++stats.exercised;
    for (int p = 0; p < 5; ++p) {
      ++stats.comparisons;
      if (eval(d, gen.uniform(-10.0, 10.0)) != 0.0) {
        stats.fail("derivative of constant " + std::to_string(c) + " is not zero");
        break;
      }
    }
  }
  return stats;
}

}  // namespace eulerquad::testing

#include "eulerquad/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eulerquad/errors.hpp"

namespace eulerquad {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_order(int n) {
  if (n < 0) throw PreconditionError("Taylor order must be non-negative");
}

}  // namespace

std::vector<double> taylor_coefficients(const Expr& f, double a, int n) {
  check_order(n);
  std::vector<double> coefficients;
  coefficients.reserve(static_cast<std::size_t>(n) + 1);
  Expr derivative = simplify(f);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) derivative = differentiate(derivative);
    coefficients.push_back(eval(derivative, a) / factorial(j));
  }
  return coefficients;
}

TaylorExpansion lagrange_remainder(const Expr& f, double a, double b, int n, double tolerance,
                                   const LocateOptions& options) {
  check_order(n);
  if (!(a < b)) throw PreconditionError("a must be < b");
  if (!(tolerance > 0.0)) throw PreconditionError("tolerance must be > 0");
  if (options.scan_points < 1) throw PreconditionError("scan_points must be >= 1");

  TaylorExpansion t;
  t.a = a;
  t.b = b;
  t.order = n;
  t.tolerance = tolerance;
  t.coefficients = taylor_coefficients(f, a, n);

  const double h = b - a;
  double polynomial = 0.0;
  for (int j = n; j >= 0; --j) polynomial = polynomial * h + t.coefficients[j];
  t.remainder = (eval(f, b) - polynomial) / std::pow(h, n + 1);

  const Expr next = differentiate(f, n + 1);
  const double scale = factorial(n + 1);
  const double target = t.remainder * scale;
  const double near = tolerance * (1.0 + std::abs(target));
  auto gap = [&](double x) { return eval(next, x) - target; };

  const int m = options.scan_points;
  std::vector<double> xs(static_cast<std::size_t>(m));
  std::vector<double> gs(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    xs[i] = a + h * (i + 1) / (m + 1);
    gs[i] = gap(xs[i]);
  }

  std::optional<double> c;
  if (std::all_of(gs.begin(), gs.end(), [&](double g) { return std::abs(g) <= near; })) {
    c = a + h / 2.0;
  } else {
    for (int i = 0; i < m && !c; ++i) {
      if (gs[i] == 0.0) {
        c = xs[i];
      } else if (i + 1 < m && std::signbit(gs[i]) != std::signbit(gs[i + 1]) && gs[i + 1] != 0.0) {
        double lo = xs[i];
        double hi = xs[i + 1];
        const bool lo_negative = gs[i] < 0.0;
        for (int it = 0; it < options.max_bisections && hi - lo > tolerance; ++it) {
          const double mid = lo + (hi - lo) / 2.0;
          if (mid <= lo || mid >= hi) break;
          const double g = gap(mid);
          if (g == 0.0) {
            lo = hi = mid;
            break;
          }
          ((g < 0.0) == lo_negative ? lo : hi) = mid;
        }
        c = lo + (hi - lo) / 2.0;
      }
    }
    if (!c) {
      const auto best = std::min_element(gs.begin(), gs.end(),
                                         [](double l, double r) { return std::abs(l) < std::abs(r); });
      if (std::abs(*best) <= near) c = xs[static_cast<std::size_t>(best - gs.begin())];
    }
  }

  if (!c) {
    const auto [lo, hi] = std::minmax_element(gs.begin(), gs.end());
    throw NotLocatedError(*lo + target, *hi + target, target);
  }
  t.lagrange_c = c;
  t.residual = std::abs(eval(next, *c) / scale - t.remainder);
  return t;
}

double remainder_bound(const Expr& f, double a, double b, int n, int samples) {
  check_order(n);
  if (!(a < b)) throw PreconditionError("a must be < b");
  const double sup = sup_abs(differentiate(f, n + 1), a, b, samples);
  return sup * std::pow(b - a, n + 1) / factorial(n + 1);
}

Expr auxiliary_function(const Expr& f, double b, int n, double remainder) {
  check_order(n);
  const Expr x = Expr::variable();
  const Expr gap = Expr::constant(b) - x;
  Expr g = Expr::constant(eval(f, b));
  Expr derivative = simplify(f);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) derivative = differentiate(derivative);
    g = g - derivative * Expr::pow(gap, j) / Expr::constant(factorial(j));
  }
  g = g - Expr::constant(remainder) * Expr::pow(gap, n + 1);
  return simplify(g);
}

}  // namespace eulerquad

#pragma once

#include <optional>
#include <vector>

#include "eulerquad/expr.hpp"

namespace eulerquad {

/// Taylor polynomial of f about a, evaluated toward b, with the Lagrange
/// form of the remainder.
struct TaylorExpansion {
  double a = 0.0;
  double b = 0.0;
  int order = 0;
  /// f^(j)(a) / j! for j = 0..order.
  std::vector<double> coefficients;
  /// R with f(b) = sum_j coefficients[j] (b-a)^j + R (b-a)^(order+1).
  double remainder = 0.0;
  /// Interior point c with f^(order+1)(c) / (order+1)! = R, when located.
  std::optional<double> lagrange_c;
  /// |f^(order+1)(c) / (order+1)! - R| at the located c.
  double residual = 0.0;
  double tolerance = 0.0;
};

/// [f(a), f'(a), f''(a)/2!, ..., f^(n)(a)/n!]. Throws EvalError when a
/// derivative cannot be evaluated at a.
std::vector<double> taylor_coefficients(const Expr& f, double a, int n);

struct LocateOptions {
  /// Interior points scanned for a sign change of f^(n+1) - K.
  int scan_points = 1 << 10;
  int max_bisections = 200;
};

/// Builds the expansion and locates c in (a, b) by scanning f^(n+1) - K,
/// K = R (n+1)!, then bisecting the first sign-change bracket down to
/// `tolerance`. A derivative that stays within tolerance of K across the
/// whole scan is treated as constant and yields c = (a+b)/2. Throws
/// NotLocatedError when neither a bracket nor a near-match exists.
TaylorExpansion lagrange_remainder(const Expr& f, double a, double b, int n, double tolerance,
                                   const LocateOptions& options = {});

/// sup_abs(f^(n+1), a, b) (b-a)^(n+1) / (n+1)!.
double remainder_bound(const Expr& f, double a, double b, int n, int samples = 1001);

/// g(x) = f(b) - sum_{j<=n} f^(j)(x) (b-x)^j / j! - R (b-x)^(n+1), which
/// vanishes at x = a and x = b and whose derivative vanishes at the
/// Lagrange point.
Expr auxiliary_function(const Expr& f, double b, int n, double remainder);

}  // namespace eulerquad

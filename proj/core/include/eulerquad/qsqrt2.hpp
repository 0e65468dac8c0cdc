#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "eulerquad/rational.hpp"

namespace eulerquad {

/// Exact element p + q*sqrt(2) of the field Q(sqrt 2). The pair (p, q) is
/// unique because sqrt(2) is irrational, so equality is component-wise and
/// the element is rational exactly when q == 0.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational p, Rational q = Rational()) : p_(std::move(p)), q_(std::move(q)) {}  // NOLINT

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
  /// sqrt(2) - 1, the irrational split point of the additivity example.
  static QSqrt2 sqrt2_minus_1() { return QSqrt2(Rational(-1), Rational(1)); }

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& sqrt2_part() const noexcept { return q_; }

  bool is_rational() const noexcept { return q_.is_zero(); }
  bool is_zero() const noexcept { return p_.is_zero() && q_.is_zero(); }

  /// Exact sign of p + q*sqrt(2), decided with integer arithmetic only.
  int sign() const;

  double to_double() const;
  /// "p + q*sqrt(2)" with both parts as "num/den".
  std::string to_string() const;

  QSqrt2 operator-() const { return QSqrt2(-p_, -q_); }
  QSqrt2& operator+=(const QSqrt2& rhs);
  QSqrt2& operator-=(const QSqrt2& rhs);
  QSqrt2& operator*=(const QSqrt2& rhs);
  /// Multiplies by the conjugate over the norm p^2 - 2 q^2, which is nonzero
  /// for every nonzero element. Throws PreconditionError when rhs == 0.
  QSqrt2& operator/=(const QSqrt2& rhs);

  friend QSqrt2 operator+(QSqrt2 l, const QSqrt2& r) { return l += r; }
  friend QSqrt2 operator-(QSqrt2 l, const QSqrt2& r) { return l -= r; }
  friend QSqrt2 operator*(QSqrt2 l, const QSqrt2& r) { return l *= r; }
  friend QSqrt2 operator/(QSqrt2 l, const QSqrt2& r) { return l /= r; }

  friend bool operator==(const QSqrt2&, const QSqrt2&) = default;
  friend std::strong_ordering operator<=>(const QSqrt2& l, const QSqrt2& r);

 private:
  Rational p_;
  Rational q_;
};

QSqrt2 qs2_arith(const QSqrt2& lhs, ArithOp op, const QSqrt2& rhs);

}  // namespace eulerquad

#include "eulerquad/qsqrt2.hpp"

#include <cmath>
#include <numbers>

#include "eulerquad/errors.hpp"

namespace eulerquad {

int QSqrt2::sign() const {
  const int sp = p_.sign();
  const int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: |p| vs |q| sqrt(2), i.e. p^2 vs 2 q^2.
  const Rational p2 = p_ * p_;
  const Rational q2 = Rational(2) * q_ * q_;
  return p2 > q2 ? sp : sq;
}

double QSqrt2::to_double() const { return p_.to_double() + q_.to_double() * std::numbers::sqrt2; }

std::string QSqrt2::to_string() const { return p_.to_string() + " + " + q_.to_string() + "*sqrt(2)"; }

QSqrt2& QSqrt2::operator+=(const QSqrt2& rhs) {
  p_ += rhs.p_;
  q_ += rhs.q_;
  return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& rhs) {
  p_ -= rhs.p_;
  q_ -= rhs.q_;
  return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& rhs) {
  Rational p = p_ * rhs.p_ + Rational(2) * q_ * rhs.q_;
  Rational q = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero in Q(sqrt 2)");
  const Rational norm = rhs.p_ * rhs.p_ - Rational(2) * rhs.q_ * rhs.q_;
  *this *= QSqrt2(rhs.p_, -rhs.q_);
  p_ /= norm;
  q_ /= norm;
  return *this;
}

std::strong_ordering operator<=>(const QSqrt2& l, const QSqrt2& r) {
  const int s = (l - r).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

QSqrt2 qs2_arith(const QSqrt2& lhs, ArithOp op, const QSqrt2& rhs) {
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
    case ArithOp::Div: return lhs / rhs;
  }
  throw std::logic_error("unknown arithmetic op");
}

}  // namespace eulerquad

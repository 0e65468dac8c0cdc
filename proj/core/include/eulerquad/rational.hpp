#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace eulerquad {

/// Arbitrary-precision rational in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  /// Throws PreconditionError when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q" or "p" (decimal integers, optional leading '-').
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  double to_double() const { return value_.get_d(); }

  /// Always "num/den", e.g. "1/1", "-3/4", "0/1".
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws PreconditionError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }

  friend bool operator==(const Rational& l, const Rational& r) { return cmp(l.value_, r.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v);
  mpq_class value_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Rational rat_arith(const Rational& lhs, ArithOp op, const Rational& rhs);

}  // namespace eulerquad

#include "eulerquad/rational.hpp"

#include <cctype>
#include <string>

#include "eulerquad/errors.hpp"

namespace eulerquad {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no portable int64_t constructor; go through the decimal form.
  return mpz_class(std::to_string(v));
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(std::int64_t integer) : value_(to_mpz(integer)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_mpz(num), to_mpz(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  }
  return Rational(mpz_class(std::string(num)), mpz_class(std::string(den)));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational rat_arith(const Rational& lhs, ArithOp op, const Rational& rhs) {
  switch (op) {
    case ArithOp::Add: return lhs + rhs;
    case ArithOp::Sub: return lhs - rhs;
    case ArithOp::Mul: return lhs * rhs;
    case ArithOp::Div: return lhs / rhs;
  }
  throw std::logic_error("unknown arithmetic op");
}

}  // namespace eulerquad

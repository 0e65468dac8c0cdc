#include "eulerquad/expr.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <system_error>

#include "eulerquad/errors.hpp"

namespace eulerquad {

struct Expr::Node {
  NodeKind kind;
  double value = 0.0;
  Expr a;
  Expr b;

  Node(NodeKind k, double v) : kind(k), value(v), a(nullptr), b(nullptr) {}
  Node(NodeKind k, double v, Expr l, Expr r) : kind(k), value(v), a(std::move(l)), b(std::move(r)) {}
};

const char* to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Constant: return "Constant";
    case NodeKind::Variable: return "Variable";
    case NodeKind::Neg: return "Neg";
    case NodeKind::Add: return "Add";
    case NodeKind::Sub: return "Sub";
    case NodeKind::Mul: return "Mul";
    case NodeKind::Div: return "Div";
    case NodeKind::Pow: return "Pow";
    case NodeKind::Sqrt: return "Sqrt";
    case NodeKind::Sin: return "Sin";
    case NodeKind::Cos: return "Cos";
    case NodeKind::Exp: return "Exp";
    case NodeKind::Ln: return "Ln";
  }
  return "?";
}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr::Expr() : Expr(constant(0.0)) {}

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(NodeKind::Constant, value));
}

Expr Expr::variable() {
  static const Expr x(std::make_shared<const Node>(NodeKind::Variable, 0.0));
  return x;
}

Expr Expr::unary(NodeKind kind, Expr arg) {
  return Expr(std::make_shared<const Node>(kind, 0.0, std::move(arg), Expr(nullptr)));
}

Expr Expr::binary(NodeKind kind, Expr l, Expr r) {
  return Expr(std::make_shared<const Node>(kind, 0.0, std::move(l), std::move(r)));
}

Expr Expr::pow(Expr base, double exponent) {
  return Expr(std::make_shared<const Node>(NodeKind::Pow, exponent, std::move(base), Expr(nullptr)));
}

Expr Expr::sqrt(Expr arg) { return unary(NodeKind::Sqrt, std::move(arg)); }
Expr Expr::sin(Expr arg) { return unary(NodeKind::Sin, std::move(arg)); }
Expr Expr::cos(Expr arg) { return unary(NodeKind::Cos, std::move(arg)); }
Expr Expr::exp(Expr arg) { return unary(NodeKind::Exp, std::move(arg)); }
Expr Expr::ln(Expr arg) { return unary(NodeKind::Ln, std::move(arg)); }

Expr operator-(Expr e) { return Expr::unary(NodeKind::Neg, std::move(e)); }
Expr operator+(Expr l, Expr r) { return Expr::binary(NodeKind::Add, std::move(l), std::move(r)); }
Expr operator-(Expr l, Expr r) { return Expr::binary(NodeKind::Sub, std::move(l), std::move(r)); }
Expr operator*(Expr l, Expr r) { return Expr::binary(NodeKind::Mul, std::move(l), std::move(r)); }
Expr operator/(Expr l, Expr r) { return Expr::binary(NodeKind::Div, std::move(l), std::move(r)); }

NodeKind Expr::kind() const noexcept { return node_->kind; }
double Expr::value() const noexcept { return node_->value; }

const Expr& Expr::lhs() const {
  if (!node_->a.node_) throw std::logic_error(std::string(to_string(kind())) + " node has no operands");
  return node_->a;
}

const Expr& Expr::rhs() const {
  if (!node_->b.node_) throw std::logic_error(std::string(to_string(kind())) + " node has no second operand");
  return node_->b;
}

namespace {

bool is_unary(NodeKind k) {
  switch (k) {
    case NodeKind::Neg:
    case NodeKind::Sqrt:
    case NodeKind::Sin:
    case NodeKind::Cos:
    case NodeKind::Exp:
    case NodeKind::Ln:
    case NodeKind::Pow:
      return true;
    default:
      return false;
  }
}

bool is_binary(NodeKind k) {
  return k == NodeKind::Add || k == NodeKind::Sub || k == NodeKind::Mul || k == NodeKind::Div;
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("cannot format constant");
  return std::string(buf.data(), ptr);
}

std::string print_number(double v) {
  if (std::signbit(v)) return "(-" + shortest(-v) + ")";
  return shortest(v);
}

std::string describe(const Expr& node) {
  std::string text = print(node);
  if (text.size() > 80) text = text.substr(0, 77) + "...";
  return text;
}

double checked(const Expr& node, double x, double result) {
  if (!std::isfinite(result)) throw EvalError(describe(node), x, "non-finite result");
  return result;
}

}  // namespace

bool operator==(const Expr& l, const Expr& r) {
  if (l.node_ == r.node_) return true;
  if (l.kind() != r.kind()) return false;
  switch (l.kind()) {
    case NodeKind::Constant:
      return std::bit_cast<std::uint64_t>(l.value()) == std::bit_cast<std::uint64_t>(r.value());
    case NodeKind::Variable:
      return true;
    case NodeKind::Pow:
      return l.value() == r.value() && l.lhs() == r.lhs();
    default:
      break;
  }
  if (is_binary(l.kind())) return l.lhs() == r.lhs() && l.rhs() == r.rhs();
  return l.lhs() == r.lhs();
}

double eval(const Expr& f, double x) {
  switch (f.kind()) {
    case NodeKind::Constant:
      return f.value();
    case NodeKind::Variable:
      return x;
    case NodeKind::Neg:
      return -eval(f.lhs(), x);
    case NodeKind::Add:
      return checked(f, x, eval(f.lhs(), x) + eval(f.rhs(), x));
    case NodeKind::Sub:
      return checked(f, x, eval(f.lhs(), x) - eval(f.rhs(), x));
    case NodeKind::Mul:
      return checked(f, x, eval(f.lhs(), x) * eval(f.rhs(), x));
    case NodeKind::Div: {
      const double num = eval(f.lhs(), x);
      const double den = eval(f.rhs(), x);
      if (den == 0.0) throw EvalError(describe(f), x, "division by zero");
      return checked(f, x, num / den);
    }
    case NodeKind::Pow: {
      const double base = eval(f.lhs(), x);
      const double p = f.value();
      if (base == 0.0 && p < 0.0) throw EvalError(describe(f), x, "division by zero");
      if (base < 0.0 && std::trunc(p) != p) {
        throw EvalError(describe(f), x, "negative base with non-integer exponent");
      }
      return checked(f, x, std::pow(base, p));
    }
    case NodeKind::Sqrt: {
      const double u = eval(f.lhs(), x);
      if (u < 0.0) throw EvalError(describe(f), x, "sqrt of negative value");
      return std::sqrt(u);
    }
    case NodeKind::Sin:
      return std::sin(eval(f.lhs(), x));
    case NodeKind::Cos:
      return std::cos(eval(f.lhs(), x));
    case NodeKind::Exp:
      return checked(f, x, std::exp(eval(f.lhs(), x)));
    case NodeKind::Ln: {
      const double u = eval(f.lhs(), x);
      if (u <= 0.0) throw EvalError(describe(f), x, "ln of non-positive value");
      return std::log(u);
    }
  }
  throw std::logic_error("unknown node kind");
}

namespace {

// Smart constructors. Each rewrite keeps the pointwise value of the node on
// its domain (up to the sign of zero).

std::optional<double> try_fold(const Expr& e) {
  try {
    return eval(e, 0.0);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

Expr fold_or(Expr e) {
  if (auto v = try_fold(e)) return Expr::constant(*v);
  return e;
}

Expr mk_neg(Expr u) {
  if (u.is_constant()) return Expr::constant(-u.value());
  if (u.kind() == NodeKind::Neg) return u.lhs();
  return -u;
}

Expr mk_add(Expr l, Expr r);
Expr mk_sub(Expr l, Expr r);

Expr mk_add(Expr l, Expr r) {
  if (l.is_constant() && r.is_constant()) return fold_or(l + r);
  if (l.is_constant(0.0)) return r;
  if (r.is_constant(0.0)) return l;
  if (r.kind() == NodeKind::Neg) return mk_sub(std::move(l), r.lhs());
  return l + r;
}

Expr mk_sub(Expr l, Expr r) {
  if (l.is_constant() && r.is_constant()) return fold_or(l - r);
  if (r.is_constant(0.0)) return l;
  if (l.is_constant(0.0)) return mk_neg(std::move(r));
  if (r.kind() == NodeKind::Neg) return mk_add(std::move(l), r.lhs());
  return l - r;
}

Expr mk_mul(Expr l, Expr r) {
  if (l.is_constant() && r.is_constant()) return fold_or(l * r);
  if (l.is_constant(0.0) || r.is_constant(0.0)) return Expr::constant(0.0);
  if (l.is_constant(1.0)) return r;
  if (r.is_constant(1.0)) return l;
  if (l.is_constant(-1.0)) return mk_neg(std::move(r));
  if (r.is_constant(-1.0)) return mk_neg(std::move(l));
  if (l.kind() == NodeKind::Neg) return mk_neg(mk_mul(l.lhs(), std::move(r)));
  if (r.kind() == NodeKind::Neg) return mk_neg(mk_mul(std::move(l), r.lhs()));
  return l * r;
}

Expr mk_div(Expr l, Expr r) {
  if (l.is_constant() && r.is_constant()) return fold_or(l / r);
  if (r.is_constant(1.0)) return l;
  if (r.is_constant(-1.0)) return mk_neg(std::move(l));
  if (l.is_constant(0.0)) return Expr::constant(0.0);
  return l / r;
}

Expr mk_pow(Expr base, double p) {
  if (p == 1.0) return base;
  if (p == 0.0) return Expr::constant(1.0);
  if (base.is_constant()) return fold_or(Expr::pow(std::move(base), p));
  return Expr::pow(std::move(base), p);
}

Expr mk_unary(NodeKind kind, Expr u) {
  Expr e = [&] {
    switch (kind) {
      case NodeKind::Sqrt: return Expr::sqrt(u);
      case NodeKind::Sin: return Expr::sin(u);
      case NodeKind::Cos: return Expr::cos(u);
      case NodeKind::Exp: return Expr::exp(u);
      case NodeKind::Ln: return Expr::ln(u);
      default: throw std::logic_error("not a function node");
    }
  }();
  if (u.is_constant()) return fold_or(std::move(e));
  return e;
}

Expr derive(const Expr& f) {
  switch (f.kind()) {
    case NodeKind::Constant:
      return Expr::constant(0.0);
    case NodeKind::Variable:
      return Expr::constant(1.0);
    case NodeKind::Neg:
      return mk_neg(derive(f.lhs()));
    case NodeKind::Add:
      return mk_add(derive(f.lhs()), derive(f.rhs()));
    case NodeKind::Sub:
      return mk_sub(derive(f.lhs()), derive(f.rhs()));
    case NodeKind::Mul: {
      const Expr& u = f.lhs();
      const Expr& v = f.rhs();
      return mk_add(mk_mul(derive(u), v), mk_mul(u, derive(v)));
    }
    case NodeKind::Div: {
      const Expr& u = f.lhs();
      const Expr& v = f.rhs();
      return mk_div(mk_sub(mk_mul(derive(u), v), mk_mul(u, derive(v))), mk_pow(v, 2.0));
    }
    case NodeKind::Pow: {
      const Expr& u = f.lhs();
      const double p = f.value();
      return mk_mul(mk_mul(Expr::constant(p), mk_pow(u, p - 1.0)), derive(u));
    }
    case NodeKind::Sqrt: {
      const Expr& u = f.lhs();
      return mk_div(derive(u), mk_mul(Expr::constant(2.0), mk_unary(NodeKind::Sqrt, u)));
    }
    case NodeKind::Sin: {
      const Expr& u = f.lhs();
      return mk_mul(mk_unary(NodeKind::Cos, u), derive(u));
    }
    case NodeKind::Cos: {
      const Expr& u = f.lhs();
      return mk_mul(mk_neg(mk_unary(NodeKind::Sin, u)), derive(u));
    }
    case NodeKind::Exp: {
      const Expr& u = f.lhs();
      return mk_mul(mk_unary(NodeKind::Exp, u), derive(u));
    }
    case NodeKind::Ln: {
      const Expr& u = f.lhs();
      return mk_div(derive(u), u);
    }
  }
  throw std::logic_error("unknown node kind");
}

}  // namespace

Expr simplify(const Expr& f) {
  switch (f.kind()) {
    case NodeKind::Constant:
    case NodeKind::Variable:
      return f;
    case NodeKind::Neg:
      return mk_neg(simplify(f.lhs()));
    case NodeKind::Add:
      return mk_add(simplify(f.lhs()), simplify(f.rhs()));
    case NodeKind::Sub:
      return mk_sub(simplify(f.lhs()), simplify(f.rhs()));
    case NodeKind::Mul:
      return mk_mul(simplify(f.lhs()), simplify(f.rhs()));
    case NodeKind::Div:
      return mk_div(simplify(f.lhs()), simplify(f.rhs()));
    case NodeKind::Pow:
      return mk_pow(simplify(f.lhs()), f.value());
    default:
      return mk_unary(f.kind(), simplify(f.lhs()));
  }
}

Expr differentiate(const Expr& f) { return derive(simplify(f)); }

Expr differentiate(const Expr& f, int order) {
  if (order < 0) throw PreconditionError("derivative order must be non-negative");
  Expr g = simplify(f);
  for (int j = 0; j < order; ++j) g = derive(g);
  return g;
}

std::string print(const Expr& f) {
  switch (f.kind()) {
    case NodeKind::Constant:
      return print_number(f.value());
    case NodeKind::Variable:
      return "x";
    case NodeKind::Neg:
      return "(-" + print(f.lhs()) + ")";
    case NodeKind::Add:
      return "(" + print(f.lhs()) + " + " + print(f.rhs()) + ")";
    case NodeKind::Sub:
      return "(" + print(f.lhs()) + " - " + print(f.rhs()) + ")";
    case NodeKind::Mul:
      return "(" + print(f.lhs()) + " * " + print(f.rhs()) + ")";
    case NodeKind::Div:
      return "(" + print(f.lhs()) + " / " + print(f.rhs()) + ")";
    case NodeKind::Pow:
      return "(" + print(f.lhs()) + "^" + print_number(f.value()) + ")";
    case NodeKind::Sqrt:
      return "sqrt(" + print(f.lhs()) + ")";
    case NodeKind::Sin:
      return "sin(" + print(f.lhs()) + ")";
    case NodeKind::Cos:
      return "cos(" + print(f.lhs()) + ")";
    case NodeKind::Exp:
      return "exp(" + print(f.lhs()) + ")";
    case NodeKind::Ln:
      return "ln(" + print(f.lhs()) + ")";
  }
  throw std::logic_error("unknown node kind");
}

std::size_t size(const Expr& f) {
  if (is_binary(f.kind())) return 1 + size(f.lhs()) + size(f.rhs());
  if (is_unary(f.kind())) return 1 + size(f.lhs());
  return 1;
}

double sup_abs(const Expr& f, double a, double b, int samples, double safety) {
  if (!(a < b)) throw PreconditionError("sup_abs: a must be < b");
  if (samples < 2) throw PreconditionError("sup_abs: samples must be >= 2");
  if (!(safety > 0.0)) throw PreconditionError("sup_abs: safety factor must be positive");
  const double width = b - a;
  const int last = samples - 1;
  double best = 0.0;
  for (int i = 0; i <= last; ++i) {
    const double x = i == last ? b : a + width * i / last;
    best = std::max(best, std::abs(eval(f, x)));
  }
  return best * safety;
}

}  // namespace eulerquad

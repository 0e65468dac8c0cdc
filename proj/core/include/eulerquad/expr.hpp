#pragma once

#include <memory>
#include <string>

namespace eulerquad {

enum class NodeKind {
  Constant,
  Variable,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Sqrt,
  Sin,
  Cos,
  Exp,
  Ln,
};

const char* to_string(NodeKind kind) noexcept;

/// Immutable expression tree for a real function of the single variable x.
///
/// Nodes are shared between trees, so copying an Expr is cheap and a value
/// can be evaluated from any number of threads at once. Pow carries a
/// constant real exponent; every other operand is a subtree.
class Expr {
 public:
  /// The zero constant.
  Expr();

  static Expr constant(double value);
  static Expr variable();
  static Expr pow(Expr base, double exponent);
  static Expr sqrt(Expr arg);
  static Expr sin(Expr arg);
  static Expr cos(Expr arg);
  static Expr exp(Expr arg);
  static Expr ln(Expr arg);

  NodeKind kind() const noexcept;
  /// Constant value, or the exponent of a Pow node. Zero otherwise.
  double value() const noexcept;
  /// First operand (unary argument, Pow base, binary lhs).
  const Expr& lhs() const;
  /// Second operand of a binary node.
  const Expr& rhs() const;

  bool is_constant() const noexcept { return kind() == NodeKind::Constant; }
  bool is_constant(double c) const noexcept { return is_constant() && value() == c; }

  /// Structural equality (constants compared bitwise as doubles).
  friend bool operator==(const Expr& l, const Expr& r);

  friend Expr operator-(Expr e);
  friend Expr operator+(Expr l, Expr r);
  friend Expr operator-(Expr l, Expr r);
  friend Expr operator*(Expr l, Expr r);
  friend Expr operator/(Expr l, Expr r);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  static Expr unary(NodeKind kind, Expr arg);
  static Expr binary(NodeKind kind, Expr l, Expr r);

  std::shared_ptr<const Node> node_;
};

/// Value of f at x in IEEE double precision. Throws EvalError when any
/// sub-expression leaves its domain or produces a non-finite value.
double eval(const Expr& f, double x);

/// Symbolic derivative with respect to x, already passed through simplify().
Expr differentiate(const Expr& f);

/// j-th derivative (j = 0 returns f).
Expr differentiate(const Expr& f, int order);

/// Rewrites that never change a pointwise value: folding of all-constant
/// subtrees, 0/1 identities, and sign normalisation.
Expr simplify(const Expr& f);

/// Fully parenthesised text in the parser's grammar; parse(print(e))
/// evaluates bit-identically to e. Constants use shortest round-trip form.
std::string print(const Expr& f);

/// Number of nodes in the tree.
std::size_t size(const Expr& f);

inline constexpr double kDefaultSupSafety = 1.10;

/// Estimate of sup |f| on [a, b]: the largest |f| over `samples` equally
/// spaced points (both ends included), multiplied by `safety`. This is a
/// sampling estimate, not a certified bound. An EvalError at a sample point
/// propagates and identifies that point.
double sup_abs(const Expr& f, double a, double b, int samples, double safety = kDefaultSupSafety);

}  // namespace eulerquad

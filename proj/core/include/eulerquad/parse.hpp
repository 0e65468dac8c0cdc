#pragma once

#include <string_view>

#include "eulerquad/errors.hpp"
#include "eulerquad/expr.hpp"

namespace eulerquad {

/// Parses the expression grammar
///
///   expr  := term (("+"|"-") term)*
///   term  := unary (("*"|"/") unary)*
///   unary := "-" unary | power
///   power := atom ("^" unary)?
///   atom  := NUMBER | "x" | FUNC "(" expr ")" | "(" expr ")"
///   FUNC  := "sqrt" | "sin" | "cos" | "exp" | "ln"
///
/// Whitespace between tokens is ignored. The exponent of `^` must fold to a
/// finite constant. Throws ParseError carrying a ParseDiagnostic.
Expr parse(std::string_view source);

}  // namespace eulerquad

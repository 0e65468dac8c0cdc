#include "eulerquad/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>

namespace eulerquad {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t begin;
  std::size_t end;
  double number = 0.0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Expr parse_all() {
    if (cur_.kind == Tok::End) fail(0, src_.size(), "empty input");
    Expr e = expr();
    if (cur_.kind != Tok::End) {
      if (cur_.kind == Tok::RParen) fail(cur_.begin, cur_.end, "unbalanced ')'");
      fail(cur_.begin, cur_.end, "unexpected token '" + text(cur_) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t begin, std::size_t end, std::string message) const {
    // Keep the span inside the source, even for errors reported at end of input.
    if (src_.empty()) {
      begin = end = 0;
    } else {
      if (begin >= src_.size()) begin = src_.size() - 1;
      if (end > src_.size()) end = src_.size();
      if (end <= begin) end = begin + 1;
    }
    throw ParseError(ParseDiagnostic{begin, end, std::move(message), Severity::Error});
  }

  std::string text(const Token& t) const { return std::string(src_.substr(t.begin, t.end - t.begin)); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = Token{Tok::End, start, start};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      cur_ = Token{k, start, pos_};
    };
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-': return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '/': return single(Tok::Slash);
      case '^': return single(Tok::Caret);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      cur_ = Token{Tok::Ident, start, pos_};
      return;
    }
    fail(start, start + 1, std::string("unexpected character '") + c + "'");
  }

  void lex_number(std::size_t start) {
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) fail(start, pos_, "malformed number");
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail(mark, pos_, "malformed exponent in number");
    }
    double value = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range || (ec == std::errc{} && !std::isfinite(value))) {
      fail(start, pos_, "number out of range");
    }
    if (ec != std::errc{} || ptr != last) fail(start, pos_, "malformed number");
    cur_ = Token{Tok::Number, start, pos_, value};
  }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  void expect(Tok k, const char* what, std::size_t open_at) {
    if (cur_.kind == k) {
      advance();
      return;
    }
    if (cur_.kind == Tok::End) fail(open_at, open_at + 1, std::string("unbalanced '(': missing ") + what);
    fail(cur_.begin, cur_.end, std::string("expected ") + what + ", found '" + text(cur_) + "'");
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        lhs = lhs + term();
      } else if (accept(Tok::Minus)) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      if (accept(Tok::Star)) {
        lhs = lhs * unary();
      } else if (accept(Tok::Slash)) {
        lhs = lhs / unary();
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (accept(Tok::Minus)) return -unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    const std::size_t begin = cur_.begin;
    Expr exponent = simplify(unary());
    if (!exponent.is_constant()) fail(begin, prev_end_, "exponent must be a finite constant");
    return Expr::pow(std::move(base), exponent.value());
  }

  Expr atom() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Number:
        advance();
        prev_end_ = t.end;
        return Expr::constant(t.number);
      case Tok::LParen: {
        advance();
        Expr inner = expr();
        prev_end_ = cur_.end;
        expect(Tok::RParen, "')'", t.begin);
        return inner;
      }
      case Tok::Ident:
        return identifier(t);
      case Tok::End:
        fail(t.begin, t.end, "unexpected end of input");
      case Tok::RParen:
        fail(t.begin, t.end, "unbalanced ')'");
      default:
        fail(t.begin, t.end, "unexpected token '" + text(t) + "'");
    }
  }

  Expr identifier(const Token& t) {
    const std::string name = text(t);
    advance();
    if (name == "x") {
      prev_end_ = t.end;
      return Expr::variable();
    }
    std::optional<Expr (*)(Expr)> fn;
    if (name == "sqrt") fn = &Expr::sqrt;
    if (name == "sin") fn = &Expr::sin;
    if (name == "cos") fn = &Expr::cos;
    if (name == "exp") fn = &Expr::exp;
    if (name == "ln") fn = &Expr::ln;
    if (!fn) fail(t.begin, t.end, "unknown identifier '" + name + "'");
    const std::size_t open = cur_.begin;
    if (!accept(Tok::LParen)) fail(t.begin, t.end, "expected '(' after function '" + name + "'");
    Expr arg = expr();
    prev_end_ = cur_.end;
    expect(Tok::RParen, "')'", open);
    return (*fn)(std::move(arg));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t prev_end_ = 0;
  Token cur_{Tok::End, 0, 0};
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

}  // namespace eulerquad

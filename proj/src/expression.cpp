#include "oscform/expression.hpp"

#include <cctype>
#include <string>

#include "oscform/errors.hpp"

namespace oscform {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars, SourcePos origin)
      : text_(text), vars_(vars), origin_(origin) {}

  RationalFunction parse() {
    skip_space();
    if (at_end()) fail("expected an expression");
    RationalFunction value = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    std::size_t line = origin_.line;
    std::size_t column = origin_.column;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  RationalFunction constant(const Rational& c) const {
    return RationalFunction(vars_ ? Polynomial(vars_, c) : Polynomial(c));
  }

  RationalFunction expr() {
    RationalFunction value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail_at(at, "division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) fail_at(start, "exponent too large");
    const unsigned e = static_cast<unsigned>(std::stoul(digits));
    skip_space();
    if (peek() == '^') fail("ambiguous repeated exponent; add parentheses");
    if (base.is_polynomial()) {
      const Rational dc = base.denominator().constant_term();
      Polynomial n = base.numerator().pow(e);
      Rational scale = 1;
      for (unsigned i = 0; i < e; ++i) scale /= dc;
      return RationalFunction(n.scaled(scale));
    }
    return RationalFunction(base.numerator().pow(e), base.denominator().pow(e));
  }

  RationalFunction atom() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (vars_) {
        for (std::size_t k = 0; k < vars_->size(); ++k) {
          if ((*vars_)[k] == name) return RationalFunction(Polynomial::variable(vars_, k));
        }
      }
      fail_at(start, "unknown variable '" + std::string(name) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  VarList vars_;
  SourcePos origin_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(std::string_view text, const VarList& vars, SourcePos origin) {
  return Parser(text, vars, origin).parse();
}

Polynomial parse_polynomial(std::string_view text, const VarList& vars, SourcePos origin) {
  Parser parser(text, vars, origin);
  const RationalFunction f = parser.parse();
  if (!f.is_polynomial()) parser.fail_at(0, "expected a polynomial, got a non-constant denominator");
  Polynomial p = f.numerator().scaled(1 / f.denominator().constant_term());
  return vars ? p.rebound(vars) : p;
}

}  // namespace oscform

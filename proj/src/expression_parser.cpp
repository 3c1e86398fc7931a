#include "lieinv/expression_parser.hpp"

#include <cctype>
#include <string>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarNames& names) : text_(text), names_(names) {}

  PowerProduct parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    PowerProduct value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static RationalExpression rational_operand(const PowerProduct& p, std::size_t at) {
    if (!p.is_rational()) throw ParseError("cannot add expressions with fractional powers", at);
    return p.core();
  }

  PowerProduct expr() {
    PowerProduct lhs = term();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        PowerProduct rhs = term();
        lhs = rational_operand(lhs, at) + rational_operand(rhs, at);
      } else if (accept('-')) {
        PowerProduct rhs = term();
        lhs = rational_operand(lhs, at) - rational_operand(rhs, at);
      } else {
        return lhs;
      }
    }
  }

  PowerProduct term() {
    PowerProduct lhs = unary();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = lhs * unary();
      } else if (accept('/')) {
        PowerProduct rhs = unary();
        if (rhs.is_rational() && rhs.core().is_zero()) throw ParseError("division by zero", at);
        lhs = lhs / rhs;
      } else {
        return lhs;
      }
    }
  }

  PowerProduct unary() {
    if (accept('-')) return PowerProduct(RationalExpression(-1)) * unary();
    return power();
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational exponent() {
    if (accept('(')) {
      const bool negative = accept('-');
      Rational e(integer_literal());
      if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        Integer d = integer_literal();
        if (d == 0) throw ParseError("zero denominator in exponent", at);
        e /= Rational(d);
      }
      expect(')');
      return negative ? Rational(-e) : e;
    }
    const bool negative = accept('-');
    Rational e(integer_literal());
    return negative ? Rational(-e) : e;
  }

  PowerProduct power() {
    PowerProduct base = atom();
    if (accept('^')) {
      const std::size_t at = pos_;
      Rational e = exponent();
      if (e < 0 && base.is_rational() && base.core().is_zero()) throw ParseError("negative power of zero", at);
      return base.pow(e);
    }
    return base;
  }

  PowerProduct atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PowerProduct inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return PowerProduct(RationalExpression(Rational(integer_literal())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto v = names_.lookup(name);
      if (!v) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return PowerProduct(RationalExpression::variable(*v));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

PowerProduct parse_power_product(std::string_view text, const VarNames& names) { return Parser(text, names).parse(); }

RationalExpression parse_expression(std::string_view text, const VarNames& names) {
  PowerProduct p = parse_power_product(text, names);
  if (!p.is_rational()) throw ParseError("fractional power in rational expression", 0);
  return p.core();
}

}  // namespace lieinv

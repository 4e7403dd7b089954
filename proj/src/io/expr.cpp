#include "io/expr.hpp"

#include <cctype>
#include <limits>

#include "common/error.hpp"

namespace tanlift::io {

using algebra::Poly;
using algebra::Rational;

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const algebra::VarsPtr& vars, std::size_t line, std::size_t column)
      : text_(text), vars_(vars), line_(line), column_(column) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) fail(pos_, "expected an expression");
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, column_ + at, msg);
  }

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

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const Poly d = unary();
        if (!d.is_constant()) fail(at, "division is only allowed by constants");
        if (d.is_zero()) fail(at, "division by zero");
        acc = acc.scaled(1 / d.constant_value());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(at, "expected a non-negative integer exponent");
    }
    unsigned long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (e > std::numeric_limits<algebra::Exponent>::max()) fail(at, "exponent too large");
      ++pos_;
    }
    Poly out(Rational(1), vars_);
    for (unsigned long i = 0; i < e; ++i) out *= base;
    return out;
  }

  Poly atom() {
    skip_space();
    if (pos_ == text_.size()) fail(pos_, "unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail(pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly(Rational(algebra::Integer(std::string(text_.substr(start, pos_ - start)))), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (vars_) {
        for (std::size_t i = 0; i < vars_->size(); ++i) {
          if ((*vars_)[i] == name) return Poly::variable(vars_, i);
        }
      }
      fail(start, "unknown coordinate '" + std::string(name) + "'");
    }
    fail(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const algebra::VarsPtr& vars_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const algebra::VarsPtr& vars, std::size_t line, std::size_t column) {
  return ExprParser(text, vars, line, column).parse();
}

}  // namespace tanlift::io

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational_function.hpp"

namespace qgarnier {

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      skip();
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      skip();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    skip();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    skip();
    if (!accept('^')) return base;
    skip();
    bool paren = accept('(');
    skip();
    bool neg = accept('-');
    long e = integer();
    if (paren) {
      skip();
      if (!accept(')')) fail("expected ')'");
    }
    if (neg) e = -e;
    if (e < 0 && base.is_zero()) fail("zero to a negative power");
    return base.pow(e);
  }

  RationalFunction atom() {
    skip();
    if (accept('(')) {
      RationalFunction r = expr();
      skip();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(BigRational(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto v = parse_var_name(name);
      if (!v) fail("unknown variable '" + std::string(name) + "'");
      return RationalFunction::variable(*v);
    }
    fail("expected a number, variable or '('");
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Reads the canonical text form back, e.g. "(1 + y1 + y1*y2)/(y2)".
inline RationalFunction parse_rational_function(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

}  // namespace qgarnier

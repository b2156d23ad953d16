#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../quiver/quiver.hpp"
#include "../ratfield/bigrational.hpp"
#include "../ratfield/errors.hpp"
#include "../ratfield/laurent_monomial.hpp"
#include "../ratfield/parser.hpp"

namespace qgarnier {

// A product of named roots with rational exponents, e.g.
// "a1^(-3/5) a2^(9/5) g^(2/5)" or "q^-1 b0". Factors may be separated by
// blanks or '*'.
struct RootExpr {
  std::vector<std::pair<std::string, BigRational>> factors;

  // lcm of the exponent denominators: the power that makes every exponent integral
  BigInt clearing_power() const {
    BigInt l = 1;
    for (const auto& [name, e] : factors) l = lcm(l, e.get_den());
    return l;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [name, e] : factors) {
      if (!s.empty()) s += " ";
      s += name;
      if (e != 1) s += e.get_den() == 1 ? "^" + qgarnier::to_string(e) : "^(" + qgarnier::to_string(e) + ")";
    }
    return s.empty() ? "1" : s;
  }
};

inline RootExpr parse_root_expr(std::string_view text) {
  RootExpr r;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError(why + " in root expression '" + std::string(text) + "'");
  };
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
  };
  auto integer = [&]() -> long {
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    long v = std::stol(std::string(text.substr(start, pos - start)));
    return neg ? -v : v;
  };
  for (skip(); pos < text.size(); skip()) {
    if (text[pos] == '1' && (pos + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;  // explicit unit factor
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' || text[pos] == '\''))
      ++pos;
    if (start == pos) fail("expected a root name");
    std::string name(text.substr(start, pos - start));
    for (auto& c : name)
      if (c == '\'') c = 'p';
    BigRational e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '(') {
        ++pos;
        long num = integer();
        long den = 1;
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = integer();
        }
        if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
        ++pos;
        if (den == 0) fail("zero denominator");
        e = make_rational(num, den);
      } else {
        e = integer();
      }
    }
    r.factors.emplace_back(std::move(name), e);
  }
  return r;
}

// Evaluates expr^power in the variables of a representation, given the root
// monomials. power must clear all exponent denominators.
inline LaurentMonomial evaluate_root_expr(const RootExpr& expr, const std::map<std::string, LaurentMonomial>& roots,
                                          long power = 1) {
  LaurentMonomial out;
  for (const auto& [name, e] : expr.factors) {
    auto it = roots.find(name);
    if (it == roots.end()) throw UnknownName(name);
    BigRational k = e * power;
    if (k.get_den() != 1) throw std::invalid_argument("power " + std::to_string(power) + " does not clear " + expr.to_string());
    out = out * it->second.pow(static_cast<int>(k.get_num().get_si()));
  }
  return out;
}

// Parses "y2^5*y4^4/(y3*y5^2)" style monomials.
inline LaurentMonomial root_monomial(std::string_view text) {
  auto m = LaurentMonomial::from(parse_rational_function(text));
  if (!m) throw ParseError("not a monomial: " + std::string(text));
  return *m;
}

}  // namespace qgarnier

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigrational.hpp"
#include "monomial.hpp"

namespace qgarnier {

// Sparse multivariate polynomial over a gmpxx coefficient ring (mpz_class or
// mpq_class). Terms are kept in a map ordered by GrlexGreater, so begin() is
// the leading term.
template <class C>
class SparsePolynomial {
 public:
  using Coefficient = C;
  using Terms = std::map<Monomial, C, GrlexGreater>;

  SparsePolynomial() = default;

  static SparsePolynomial constant(const C& c) {
    SparsePolynomial p;
    if (sgn(c) != 0) p.terms_.emplace(Monomial(), c);
    return p;
  }

  static SparsePolynomial variable(VarId v) { return monomial(Monomial::of(v), C(1)); }

  static SparsePolynomial monomial(const Monomial& m, const C& c) {
    if (m.has_negative()) throw std::invalid_argument("polynomial terms need nonnegative exponents");
    SparsePolynomial p;
    if (sgn(c) != 0) p.terms_.emplace(m, c);
    return p;
  }

  // caller guarantees: no zero coefficients, nonnegative exponents
  static SparsePolynomial from_terms(Terms&& terms) {
    SparsePolynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  C constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? C(0) : it->second;
  }

  const Monomial& leading_monomial() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  const C& leading_coefficient() const {
    require_nonzero();
    return terms_.begin()->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  SparsePolynomial operator-() const {
    SparsePolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.times_term(a.terms_.begin()->first, a.terms_.begin()->second);
    if (b.size() == 1) return a.times_term(b.terms_.begin()->first, b.terms_.begin()->second);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    C prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        prod = ca * cb;
        auto [it, inserted] = acc.try_emplace(ma * mb, prod);
        if (!inserted) it->second += prod;
      }
    }
    return from_unordered(std::move(acc));
  }

  SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

  SparsePolynomial scaled(const C& s) const {
    if (sgn(s) == 0) return {};
    SparsePolynomial r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  SparsePolynomial times_term(const Monomial& m, const C& s) const {
    SparsePolynomial r;
    if (sgn(s) == 0) return r;
    // multiplying by a monomial preserves the term order
    for (const auto& [mm, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, c * s);
    return r;
  }

  SparsePolynomial pow(unsigned k) const {
    SparsePolynomial result = constant(C(1));
    SparsePolynomial base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return result;
  }

  int degree_in(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
  }

  int min_degree_in(VarId v) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.exponent(v);
    for (const auto& [m, c] : terms_) d = std::min(d, m.exponent(v));
    return d;
  }

  int total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  std::vector<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& f : m.factors()) vs.insert(f.first);
    return {vs.begin(), vs.end()};
  }

  bool contains(VarId v) const {
    for (const auto& [m, c] : terms_)
      if (m.exponent(v) != 0) return true;
    return false;
  }

  // gcd of all term monomials
  Monomial monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
      g = Monomial::min(g, m);
      if (g.is_one()) break;
    }
    return g;
  }

  SparsePolynomial divided_by_monomial(const Monomial& d) const {
    SparsePolynomial r;
    for (const auto& [m, c] : terms_) {
      Monomial q = m / d;
      if (q.has_negative()) throw std::invalid_argument("monomial does not divide polynomial");
      r.terms_.emplace_hint(r.terms_.end(), std::move(q), c);
    }
    return r;
  }

  template <class D, class F>
  SparsePolynomial<D> map_coefficients(F&& f) const {
    SparsePolynomial<D> r;
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) { return !(a == b); }

  // total order used to key canonical factors in maps
  friend bool operator<(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    GrlexGreater gt;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j) {
      if (i->first != j->first) return gt(i->first, j->first);
      if (i->second != j->second) return i->second < j->second;
    }
    return false;
  }

 private:
  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  }

  static SparsePolynomial from_unordered(std::unordered_map<Monomial, C, MonomialHash>&& acc) {
    std::vector<std::pair<Monomial, C>> flat;
    flat.reserve(acc.size());
    for (auto& kv : acc)
      if (sgn(kv.second) != 0) flat.emplace_back(kv.first, std::move(kv.second));
    GrlexGreater gt;
    std::sort(flat.begin(), flat.end(), [&](const auto& x, const auto& y) { return gt(x.first, y.first); });
    SparsePolynomial r;
    for (auto& kv : flat) r.terms_.emplace_hint(r.terms_.end(), std::move(kv.first), std::move(kv.second));
    return r;
  }

  Terms terms_;
};

using Polynomial = SparsePolynomial<BigRational>;
using IntPolynomial = SparsePolynomial<BigInt>;

template <class C>
SparsePolynomial<C> operator*(const C& s, const SparsePolynomial<C>& p) {
  return p.scaled(s);
}

inline IntPolynomial to_int_polynomial(const Polynomial& p, BigInt* scale = nullptr) {
  BigInt l = 1;
  for (const auto& [m, c] : p.terms()) l = lcm(l, c.get_den());
  IntPolynomial r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, BigInt(c.get_num() * (l / c.get_den())));
  if (scale) *scale = l;
  return r;
}

inline Polynomial to_polynomial(const IntPolynomial& p) {
  return p.map_coefficients<BigRational>([](const BigInt& c) { return BigRational(c); });
}

template <class C>
std::string term_text(const Monomial& m, const C& abs_coeff) {
  bool unit = abs_coeff == 1;
  if (m.is_one()) return to_string(abs_coeff);
  if (unit) return m.to_string();
  return to_string(abs_coeff) + "*" + m.to_string();
}

// Ascending graded-lex rendering, e.g. "1 + y1 - 2*y1*y2".
template <class C>
std::string to_string(const SparsePolynomial<C>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool neg = sgn(c) < 0;
    C mag = neg ? C(-c) : c;
    if (first) {
      s += neg ? "-" : "";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    s += term_text(m, mag);
  }
  return s;
}

}  // namespace qgarnier

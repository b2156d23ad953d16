#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace qgarnier {

namespace gcd_detail {

inline BigInt abs_big(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& [m, c] : p.terms()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

inline IntPolynomial divexact_scalar(const IntPolynomial& p, const BigInt& d) {
  if (d == 1) return p;
  IntPolynomial::Terms out;
  for (const auto& [m, c] : p.terms()) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.emplace_hint(out.end(), m, std::move(q));
  }
  return IntPolynomial::from_terms(std::move(out));
}

inline IntPolynomial positive_lead(const IntPolynomial& p) {
  if (!p.is_zero() && p.leading_coefficient() < 0) return -p;
  return p;
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  return positive_lead(divexact_scalar(p, content(p)));
}

inline BigInt max_norm(const IntPolynomial& p) {
  BigInt n = 0;
  for (const auto& [m, c] : p.terms()) {
    BigInt a = abs_big(c);
    if (a > n) n = a;
  }
  return n;
}

using DegreeProfile = std::vector<std::pair<VarId, int>>;

inline DegreeProfile degree_profile(const IntPolynomial& p) {
  std::map<VarId, int> d;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.factors()) {
      int& slot = d[v];
      slot = std::max(slot, e);
    }
  return {d.begin(), d.end()};
}

inline int profile_degree(const DegreeProfile& prof, VarId v) {
  for (const auto& [w, e] : prof)
    if (w == v) return e;
  return 0;
}

}  // namespace gcd_detail

// Exact division in Z[vars]; nullopt when h does not divide f.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& f, const IntPolynomial& h) {
  using namespace gcd_detail;
  if (h.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (f.is_zero()) return IntPolynomial();
  if (h.is_constant()) {
    const BigInt d = h.constant_term();
    for (const auto& [m, c] : f.terms())
      if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    return divexact_scalar(f, d);
  }
  const Monomial& lmh = h.leading_monomial();
  const BigInt& lch = h.leading_coefficient();
  if (!lmh.divides(f.leading_monomial())) return std::nullopt;

  DegreeProfile pf = degree_profile(f);
  DegreeProfile ph = degree_profile(h);
  DegreeProfile bound;
  for (const auto& [v, e] : ph)
    if (profile_degree(pf, v) < e) return std::nullopt;
  for (const auto& [v, e] : pf) bound.emplace_back(v, e - profile_degree(ph, v));

  IntPolynomial::Terms r = f.terms();
  IntPolynomial::Terms q;
  BigInt tc, prod;
  while (!r.empty()) {
    auto it = r.begin();
    if (it->first.degree() < lmh.degree() || !lmh.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lch.get_mpz_t())) return std::nullopt;
    Monomial tm = it->first / lmh;
    for (const auto& [v, e] : tm.factors())
      if (e > profile_degree(bound, v)) return std::nullopt;
    mpz_divexact(tc.get_mpz_t(), it->second.get_mpz_t(), lch.get_mpz_t());
    r.erase(it);
    bool first = true;
    for (const auto& [m, c] : h.terms()) {
      if (first) {
        first = false;
        continue;
      }
      prod = c * tc;
      auto [slot, inserted] = r.try_emplace(m * tm);
      if (inserted) {
        slot->second = -prod;
      } else {
        slot->second -= prod;
        if (sgn(slot->second) == 0) r.erase(slot);
      }
    }
    q.emplace_hint(q.end(), std::move(tm), tc);
  }
  return IntPolynomial::from_terms(std::move(q));
}

inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

namespace gcd_detail {

struct GcdTriple {
  IntPolynomial h, cff, cfg;
};

// p with variable v replaced by the integer x
inline IntPolynomial evaluate_at(const IntPolynomial& p, VarId v, const BigInt& x) {
  std::vector<BigInt> powers{BigInt(1)};
  std::unordered_map<Monomial, BigInt, MonomialHash> acc;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * x);
    BigInt term = c * powers[e];
    auto [it, inserted] = acc.try_emplace(e == 0 ? m : m.without(v), term);
    if (!inserted) it->second += term;
  }
  IntPolynomial out;
  for (auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

// Inverse of evaluate_at for a polynomial whose v-coefficients are small
// compared to x: read every integer coefficient in symmetric base x.
inline IntPolynomial interpolate(const IntPolynomial& h, VarId v, const BigInt& x) {
  IntPolynomial out;
  BigInt half = x / 2;
  BigInt r, d;
  for (const auto& [m, c] : h.terms()) {
    r = c;
    int k = 0;
    while (r != 0) {
      mpz_fdiv_r(d.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t());
      if (d > half) d -= x;
      if (d != 0) out.add_term(m * Monomial::of(v, k), d);
      r -= d;
      mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t());
      ++k;
    }
  }
  return positive_lead(out);
}

inline GcdTriple trivial_with_zero(const IntPolynomial& f, const IntPolynomial& g) {
  // exactly one of f, g may be zero here
  if (f.is_zero() && g.is_zero()) return {IntPolynomial(), IntPolynomial(), IntPolynomial()};
  if (f.is_zero()) {
    IntPolynomial h = positive_lead(g);
    BigInt s = (h == g) ? BigInt(1) : BigInt(-1);
    return {h, IntPolynomial(), IntPolynomial::constant(s)};
  }
  IntPolynomial h = positive_lead(f);
  BigInt s = (h == f) ? BigInt(1) : BigInt(-1);
  return {h, IntPolynomial::constant(s), IntPolynomial()};
}

// Heuristic GCD (Char, Geddes and Gonnet): evaluate the main variable at a
// large integer, recurse, and read the result back in base x.
inline std::optional<GcdTriple> heu_gcd(const IntPolynomial& f0, const IntPolynomial& g0,
                                        const std::vector<VarId>& vars, std::size_t level) {
  if (f0.is_zero() || g0.is_zero()) return trivial_with_zero(f0, g0);
  if (level == vars.size()) {
    BigInt a = f0.constant_term(), b = g0.constant_term();
    BigInt h = gcd(a, b);
    return GcdTriple{IntPolynomial::constant(h), IntPolynomial::constant(BigInt(a / h)),
                     IntPolynomial::constant(BigInt(b / h))};
  }
  BigInt c = gcd(content(f0), content(g0));
  IntPolynomial f = divexact_scalar(f0, c);
  IntPolynomial g = divexact_scalar(g0, c);

  BigInt fn = max_norm(f), gn = max_norm(g);
  BigInt b = 2 * std::min(fn, gn) + 29;
  BigInt x = std::min(b, BigInt(99 * isqrt(b)));
  BigInt lf = abs_big(f.leading_coefficient()), lg = abs_big(g.leading_coefficient());
  BigInt alt = 2 * std::min(BigInt(fn / lf), BigInt(gn / lg)) + 4;
  if (alt > x) x = alt;

  const VarId v = vars[level];
  for (int attempt = 0; attempt < 6; ++attempt) {
    IntPolynomial ff = evaluate_at(f, v, x);
    IntPolynomial gg = evaluate_at(g, v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      if (auto sub = heu_gcd(ff, gg, vars, level + 1)) {
        IntPolynomial h = primitive_part(interpolate(sub->h, v, x));
        if (!h.is_zero()) {
          if (auto cff = divide_exact(f, h))
            if (auto cfg = divide_exact(g, h)) return GcdTriple{h.scaled(c), *cff, *cfg};
        }
        IntPolynomial cff = interpolate(sub->cff, v, x);
        if (!cff.is_zero()) {
          if (auto hh = divide_exact(f, cff))
            if (auto cfg = divide_exact(g, *hh)) return GcdTriple{hh->scaled(c), cff, *cfg};
        }
        IntPolynomial cfg = interpolate(sub->cfg, v, x);
        if (!cfg.is_zero()) {
          if (auto hh = divide_exact(g, cfg))
            if (auto cff2 = divide_exact(f, *hh)) return GcdTriple{hh->scaled(c), *cff2, cfg};
        }
      }
    }
    x = BigInt(73794 * x * isqrt(isqrt(x))) / 27011;
  }
  return std::nullopt;
}

// coefficients of p as a polynomial in v, keyed by degree
inline std::map<int, IntPolynomial> coefficients_in(const IntPolynomial& p, VarId v) {
  std::map<int, IntPolynomial> out;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(v);
    out[e].add_term(e == 0 ? m : m.without(v), c);
  }
  return out;
}

inline IntPolynomial content_in(const IntPolynomial& p, VarId v) {
  IntPolynomial g;
  for (const auto& [e, coeff] : coefficients_in(p, v)) {
    g = gcd(g, coeff);
    if (g.is_constant()) break;
  }
  return g;
}

inline IntPolynomial leading_coeff_in(const IntPolynomial& p, VarId v) {
  auto cs = coefficients_in(p, v);
  return cs.rbegin()->second;
}

inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b, VarId v) {
  int db = b.degree_in(v);
  IntPolynomial lb = leading_coeff_in(b, v);
  IntPolynomial r = a;
  int delta = a.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    IntPolynomial t = leading_coeff_in(r, v) * IntPolynomial::monomial(Monomial::of(v, dr - db), BigInt(1));
    r = lb * r - t * b;
    --delta;
  }
  if (delta > 0) r = r * lb.pow(static_cast<unsigned>(delta));
  return r;
}

// Recursive primitive PRS; slow but unconditional.
inline IntPolynomial prs_gcd(const IntPolynomial& f, const IntPolynomial& g, VarId v) {
  IntPolynomial cf = content_in(f, v), cg = content_in(g, v);
  IntPolynomial c = gcd(cf, cg);
  IntPolynomial a = *divide_exact(f, cf);
  IntPolynomial b = *divide_exact(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero() && b.degree_in(v) > 0) {
    IntPolynomial r = pseudo_remainder(a, b, v);
    a = b;
    if (r.is_zero()) {
      b = IntPolynomial();
      break;
    }
    b = *divide_exact(r, content_in(r, v));
  }
  // b nonzero of degree 0 in v means the primitive parts are coprime
  if (!b.is_zero()) return positive_lead(c);
  IntPolynomial pp = *divide_exact(a, content_in(a, v));
  return positive_lead(c * pp);
}

}  // namespace gcd_detail

// Greatest common divisor in Z[vars], normalized to a positive leading
// coefficient. gcd(0, 0) = 0.
inline IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  using namespace gcd_detail;
  if (a0.is_zero()) return positive_lead(b0);
  if (b0.is_zero()) return positive_lead(a0);

  BigInt ca = content(a0), cb = content(b0);
  BigInt c = gcd(ca, cb);
  Monomial ma = a0.monomial_content(), mb = b0.monomial_content();
  Monomial m = Monomial::min(ma, mb);
  IntPolynomial common = IntPolynomial::monomial(m, c);

  IntPolynomial a = divexact_scalar(a0, ca).divided_by_monomial(ma);
  IntPolynomial b = divexact_scalar(b0, cb).divided_by_monomial(mb);
  a = positive_lead(a);
  b = positive_lead(b);

  // a variable present in only one argument cannot occur in the gcd
  for (;;) {
    if (a.is_constant() || b.is_constant()) return common;
    if (a == b) return common * a;
    auto va = a.variables(), vb = b.variables();
    if (va == vb) break;
    std::vector<VarId> only_a, only_b;
    std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
    std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
    if (!only_a.empty()) a = positive_lead(content_in(a, only_a.front()));
    else b = positive_lead(content_in(b, only_b.front()));
  }

  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return common * a;
  } else if (divide_exact(a, b)) {
    return common * b;
  }

  std::vector<VarId> vars = a.variables();
  if (auto res = heu_gcd(a, b, vars, 0)) return common * positive_lead(res->h);
  return common * prs_gcd(a, b, vars.front());
}

}  // namespace qgarnier

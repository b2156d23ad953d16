#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../quiver/quiver.hpp"
#include "../ratfield/bigrational.hpp"
#include "../ratfield/errors.hpp"
#include "../ratfield/rational_function.hpp"
#include "word.hpp"

namespace qgarnier {

// A quiver together with one coefficient per vertex. F is any field type:
// RationalFunction for symbolic work, BigRational for exact points, or a
// floating complex type for numerics.
template <class F>
struct Seed {
  Quiver quiver;
  std::vector<F> coeffs;  // coeffs[k-1] belongs to vertex k

  int size() const { return quiver.size(); }
  const F& y(int k) const {
    quiver.check(k);
    return coeffs[k - 1];
  }
  F& y(int k) {
    quiver.check(k);
    return coeffs[k - 1];
  }
};

namespace seed_detail {

template <class F>
bool is_zero(const F& x) {
  if constexpr (std::is_same_v<F, RationalFunction>) return x.is_zero();
  else return x == F(0);
}

template <class F>
F inverse(const F& x) {
  if constexpr (std::is_same_v<F, RationalFunction>) {
    return x.inverse();
  } else {
    if (is_zero(x)) throw DivisionByZero("coefficient vanishes");
    return F(1) / x;
  }
}

template <class F>
F power(const F& x, int k) {
  if constexpr (std::is_same_v<F, RationalFunction>) {
    return x.pow(k);
  } else {
    F base = k < 0 ? inverse(x) : x;
    F r = F(1);
    for (int e = 0; e < (k < 0 ? -k : k); ++e) r *= base;
    return r;
  }
}

}  // namespace seed_detail

template <class F>
Seed<F> initial_seed(const Quiver& q);

template <>
inline Seed<RationalFunction> initial_seed(const Quiver& q) {
  Seed<RationalFunction> s{q, {}};
  for (int k = 1; k <= q.size(); ++k) s.coeffs.push_back(RationalFunction::variable(var::y(k)));
  return s;
}

template <class F>
Seed<F> mutate(const Seed<F>& s, int i) {
  s.quiver.check(i);
  Seed<F> r{mutate_matrix(s.quiver, i), s.coeffs};
  const F& yi = s.coeffs[i - 1];
  if constexpr (std::is_same_v<F, RationalFunction>) {
    // 1 + y_i and 1 + 1/y_i are already in lowest terms when y_i is
    RationalFunction yr = yi.reduced();
    IntPolynomial sum = yr.numerator() + yr.denominator();
    RationalFunction plus = RationalFunction::from_coprime(sum, yr.denominator());
    for (int k = 1; k <= s.size(); ++k) {
      if (k == i) continue;
      int l = s.quiver.lambda(k, i);
      if (l > 0) r.coeffs[k - 1] = multiply_reduced(r.coeffs[k - 1], plus.pow(l));
      else if (l < 0) {
        if (yr.is_zero()) throw DivisionByZero("mutation at a vanishing coefficient");
        RationalFunction minus = RationalFunction::from_coprime(sum, yr.numerator());
        r.coeffs[k - 1] = multiply_reduced(r.coeffs[k - 1], minus.pow(l));
      }
    }
    r.coeffs[i - 1] = yr.inverse();
  } else {
    F plus = F(1) + yi;
    for (int k = 1; k <= s.size(); ++k) {
      if (k == i) continue;
      int l = s.quiver.lambda(k, i);
      if (l > 0) r.coeffs[k - 1] *= seed_detail::power<F>(plus, l);
      else if (l < 0) r.coeffs[k - 1] *= seed_detail::power(F(F(1) + seed_detail::inverse(yi)), l);
    }
    r.coeffs[i - 1] = seed_detail::inverse(yi);
  }
  return r;
}

template <class F>
Seed<F> transpose(const Seed<F>& s, int i, int j) {
  Seed<F> r{transpose_vertices(s.quiver, i, j), s.coeffs};
  std::swap(r.coeffs[i - 1], r.coeffs[j - 1]);
  return r;
}

template <class F>
Seed<F> reverse(const Seed<F>& s) {
  Seed<F> r{reverse(s.quiver), {}};
  r.coeffs.reserve(s.coeffs.size());
  for (const F& c : s.coeffs) r.coeffs.push_back(seed_detail::inverse(c));
  return r;
}

template <class F>
Seed<F> apply_step(const Seed<F>& s, const ElementaryStep& e) {
  switch (e.kind) {
    case ElementaryStep::Kind::Mutation: return mutate(s, e.i);
    case ElementaryStep::Kind::Transposition: return transpose(s, e.i, e.j);
    case ElementaryStep::Kind::Reversal: return reverse(s);
  }
  throw std::logic_error("unknown step kind");
}

template <class F>
Seed<F> apply_word(Seed<F> s, const Word& w) {
  for (const ElementaryStep& e : w.steps) s = apply_step(s, e);
  return s;
}

template <class F>
bool seeds_equal(const Seed<F>& a, const Seed<F>& b) {
  if (a.quiver != b.quiver || a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t k = 0; k < a.coeffs.size(); ++k)
    if (!(a.coeffs[k] == b.coeffs[k])) return false;
  return true;
}

}  // namespace qgarnier

#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>

#include "variables.hpp"

namespace qgarnier {

// Power product of variables, stored as (variable, exponent) pairs sorted by
// variable id with zero exponents dropped. Negative exponents are allowed so
// the same type backs Laurent monomials; polynomials keep them nonnegative.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;
  using Storage = boost::container::small_vector<Factor, 6>;

  Monomial() = default;

  static Monomial of(VarId v, int e = 1) {
    Monomial m;
    if (e != 0) {
      m.factors_.emplace_back(v, e);
      m.degree_ = e;
    }
    return m;
  }

  static Monomial from_factors(std::initializer_list<Factor> list) {
    return from_range(list.begin(), list.end());
  }

  template <class It>
  static Monomial from_range(It first, It last) {
    Storage raw(first, last);
    std::sort(raw.begin(), raw.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : raw) {
      if (!m.factors_.empty() && m.factors_.back().first == v) {
        m.factors_.back().second += e;
        if (m.factors_.back().second == 0) m.factors_.pop_back();
      } else if (e != 0) {
        m.factors_.emplace_back(v, e);
      }
    }
    m.recompute_degree();
    return m;
  }

  const Storage& factors() const { return factors_; }
  int degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  int exponent(VarId v) const {
    for (const auto& [w, e] : factors_) {
      if (w == v) return e;
      if (w > v) break;
    }
    return 0;
  }

  bool has_negative() const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second < 0; });
  }

  Monomial operator*(const Monomial& o) const { return combine(o, 1); }
  Monomial operator/(const Monomial& o) const { return combine(o, -1); }

  Monomial pow(int k) const {
    Monomial m;
    if (k == 0) return m;
    m.factors_ = factors_;
    for (auto& f : m.factors_) f.second *= k;
    m.degree_ = degree_ * k;
    return m;
  }

  // true when o / *this has no negative exponent
  bool divides(const Monomial& o) const {
    auto j = o.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (j != o.factors_.end() && j->first < v) ++j;
      int oe = (j != o.factors_.end() && j->first == v) ? j->second : 0;
      if (oe < e) return false;
    }
    return true;
  }

  Monomial without(VarId v) const {
    Monomial m;
    for (const auto& f : factors_)
      if (f.first != v) m.factors_.push_back(f);
    m.recompute_degree();
    return m;
  }

  // componentwise minimum (gcd for nonnegative monomials)
  static Monomial min(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        if (i->second < 0) m.factors_.push_back(*i);
        ++i;
      } else if (i == a.factors_.end() || j->first < i->first) {
        if (j->second < 0) m.factors_.push_back(*j);
        ++j;
      } else {
        int e = std::min(i->second, j->second);
        if (e != 0) m.factors_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    m.recompute_degree();
    return m;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& [v, e] : factors_) {
      h ^= (static_cast<std::size_t>(v) << 32) ^ static_cast<std::size_t>(static_cast<unsigned>(e));
      h *= 1099511628211ull;
    }
    return h;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
      if (!s.empty()) s += "*";
      s += var_name(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  Monomial combine(const Monomial& o, int sign) const {
    Monomial m;
    m.factors_.reserve(factors_.size() + o.factors_.size());
    auto i = factors_.begin(), j = o.factors_.begin();
    while (i != factors_.end() || j != o.factors_.end()) {
      if (j == o.factors_.end() || (i != factors_.end() && i->first < j->first)) {
        m.factors_.push_back(*i++);
      } else if (i == factors_.end() || j->first < i->first) {
        m.factors_.emplace_back(j->first, sign * j->second);
        ++j;
      } else {
        int e = i->second + sign * j->second;
        if (e != 0) m.factors_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    m.degree_ = degree_ + sign * o.degree_;
    return m;
  }

  void recompute_degree() {
    degree_ = 0;
    for (const auto& f : factors_) degree_ += f.second;
  }

  Storage factors_;
  int degree_ = 0;
};

// Graded lexicographic order with y1 > y2 > ...; the comparator puts larger
// monomials first so a map iterates from the leading term down.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin(), j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
      if (i->first == j->first) {
        if (i->second != j->second) return i->second > j->second;
        ++i;
        ++j;
      } else if (i->first < j->first) {
        return i->second > 0;
      } else {
        return j->second < 0;
      }
    }
    if (i != fa.end()) return i->second > 0;
    if (j != fb.end()) return j->second < 0;
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace qgarnier

#pragma once

#include <algorithm>
#include <atomic>
#include <iterator>
#include <set>
#include <type_traits>
#include <complex>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "gcd.hpp"
#include "polynomial.hpp"

namespace qgarnier {

// Fractions are reduced when their total term count passes this bound, and
// always before serialization.
inline std::atomic<std::size_t>& reduce_threshold() {
  static std::atomic<std::size_t> bound{5000};
  return bound;
}

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(IntPolynomial::constant(BigInt(1))), reduced_(true) {}

  RationalFunction(long c)  // NOLINT(google-explicit-constructor): integers embed naturally
      : num_(IntPolynomial::constant(BigInt(c))), den_(IntPolynomial::constant(BigInt(1))), reduced_(true) {}

  explicit RationalFunction(const BigRational& c)
      : num_(IntPolynomial::constant(BigInt(c.get_num()))),
        den_(IntPolynomial::constant(BigInt(c.get_den()))),
        reduced_(true) {}

  explicit RationalFunction(const IntPolynomial& num)
      : num_(num), den_(IntPolynomial::constant(BigInt(1))) {
    normalize();
  }

  RationalFunction(const IntPolynomial& num, const IntPolynomial& den) : num_(num), den_(den) { normalize(); }

  RationalFunction(const Polynomial& num, const Polynomial& den) {
    BigInt sn, sd;
    num_ = to_int_polynomial(num, &sn);
    den_ = to_int_polynomial(den, &sd);
    num_ = num_.scaled(sd);
    den_ = den_.scaled(sn);
    normalize();
  }

  // caller guarantees gcd(num, den) = 1
  static RationalFunction from_coprime(const IntPolynomial& num, const IntPolynomial& den) {
    RationalFunction r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    r.reduced_ = true;
    return r;
  }

  static RationalFunction variable(VarId v) { return RationalFunction(IntPolynomial::variable(v)); }

  static RationalFunction monomial(const Monomial& m, const BigRational& c = BigRational(1)) {
    Monomial pos, neg;
    std::vector<Monomial::Factor> p, n;
    for (const auto& [v, e] : m.factors()) (e > 0 ? p : n).emplace_back(v, e > 0 ? e : -e);
    pos = Monomial::from_range(p.begin(), p.end());
    neg = Monomial::from_range(n.begin(), n.end());
    return RationalFunction(IntPolynomial::monomial(pos, BigInt(c.get_num())),
                            IntPolynomial::monomial(neg, BigInt(c.get_den())));
  }

  const IntPolynomial& numerator() const { return num_; }
  const IntPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_reduced() const { return reduced_; }
  std::size_t term_count() const { return num_.size() + den_.size(); }

  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRational constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    BigRational r(num_.constant_term(), den_.constant_term());
    r.canonicalize();
    return r;
  }

  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  std::vector<VarId> variables() const {
    auto a = num_.variables(), b = den_.variables();
    std::vector<VarId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  void reduce() {
    if (reduced_) return;
    IntPolynomial g = gcd(num_, den_);
    if (!g.is_constant() || g.constant_term() != 1) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
    normalize();
    reduced_ = true;
  }

  RationalFunction reduced() const {
    RationalFunction r = *this;
    r.reduce();
    return r;
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFunction r;
    if (a.den_ == b.den_) {
      r.num_ = a.num_ + b.num_;
      r.den_ = a.den_;
    } else {
      r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
      r.den_ = a.den_ * b.den_;
    }
    r.reduced_ = false;
    r.normalize();
    r.maybe_reduce();
    return r;
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    RationalFunction r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.reduced_ = false;
    r.normalize();
    r.maybe_reduce();
    return r;
  }

  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    RationalFunction r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduced_ = reduced_;
    r.fix_sign();
    return r;
  }

  RationalFunction pow(long k) const {
    if (k == 0) {
      if (is_zero()) throw DivisionByZero("0^0 is undefined here");
      return RationalFunction(1);
    }
    if (k < 0) return inverse().pow(-k);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    r.reduced_ = reduced_;
    return r;
  }

  // Product of two fractions kept in lowest terms by cross-cancelling:
  // (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1)) with g1 = gcd(a,d), g2 = gcd(b,c).
  friend RationalFunction multiply_reduced(RationalFunction x, RationalFunction y) {
    x.reduce();
    y.reduce();
    if (x.is_zero() || y.is_zero()) return RationalFunction();
    IntPolynomial g1 = gcd(x.num_, y.den_);
    IntPolynomial g2 = gcd(x.den_, y.num_);
    IntPolynomial a = *divide_exact(x.num_, g1), d = *divide_exact(y.den_, g1);
    IntPolynomial b = *divide_exact(x.den_, g2), c = *divide_exact(y.num_, g2);
    RationalFunction r;
    r.num_ = a * c;
    r.den_ = b * d;
    r.normalize();
    r.reduced_ = true;
    return r;
  }

  // value equality in the field; cheap when both sides are reduced
  friend bool equals(const RationalFunction& f, const RationalFunction& g) {
    if (f.reduced_ && g.reduced_) return f.num_ == g.num_ && f.den_ == g.den_;
    return f.num_ * g.den_ == g.num_ * f.den_;
  }

  friend bool operator==(const RationalFunction& f, const RationalFunction& g) { return equals(f, g); }
  friend bool operator!=(const RationalFunction& f, const RationalFunction& g) { return !equals(f, g); }

  std::string to_string() const {
    RationalFunction r = reduced();
    if (r.den_.is_constant() && r.den_.constant_term() == 1) return qgarnier::to_string(r.num_);
    return "(" + qgarnier::to_string(r.num_) + ")/(" + qgarnier::to_string(r.den_) + ")";
  }

 private:
  void maybe_reduce() {
    if (!reduced_ && term_count() > reduce_threshold().load()) reduce();
  }

  void fix_sign() {
    if (den_.leading_coefficient() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  // Cheap normalization: common monomial and integer content, positive
  // leading coefficient of the denominator. No polynomial gcd.
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = IntPolynomial::constant(BigInt(1));
      reduced_ = true;
      return;
    }
    Monomial m = Monomial::min(num_.monomial_content(), den_.monomial_content());
    if (!m.is_one()) {
      num_ = num_.divided_by_monomial(m);
      den_ = den_.divided_by_monomial(m);
    }
    BigInt c = gcd(gcd_detail::content(num_), gcd_detail::content(den_));
    if (c != 1) {
      num_ = gcd_detail::divexact_scalar(num_, c);
      den_ = gcd_detail::divexact_scalar(den_, c);
    }
    fix_sign();
    // a monomial side shares no factor with the other once contents are gone
    if (num_.is_monomial() || den_.is_monomial()) reduced_ = true;
  }

  IntPolynomial num_;
  IntPolynomial den_;
  bool reduced_ = false;
};

inline RationalFunction power(const RationalFunction& f, long k) { return f.pow(k); }

inline RationalFunction reduce(const RationalFunction& f) { return f.reduced(); }

inline std::string to_string(const RationalFunction& f) { return f.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// limits

struct Divergent {
  VarId variable = var::eps;
  int valuation = 0;
};

using LimitResult = std::variant<RationalFunction, Divergent>;

inline bool is_divergent(const LimitResult& r) { return std::holds_alternative<Divergent>(r); }

inline int valuation(const RationalFunction& f, VarId v) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  return f.numerator().min_degree_in(v) - f.denominator().min_degree_in(v);
}

namespace detail {
inline IntPolynomial lowest_part(const IntPolynomial& p, VarId v, int degree) {
  IntPolynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(v) == degree) out.add_term(m.without(v), c);
  return out;
}
}  // namespace detail

// f = v^k (u/w) with u(0), w(0) nonzero: k > 0 gives 0, k = 0 gives
// u(0)/w(0), k < 0 is Divergent.
inline LimitResult limit_zero(const RationalFunction& f, VarId v) {
  if (f.is_zero()) return RationalFunction();
  int vn = f.numerator().min_degree_in(v);
  int vd = f.denominator().min_degree_in(v);
  if (vn > vd) return RationalFunction();
  if (vn < vd) return Divergent{v, vn - vd};
  return RationalFunction(detail::lowest_part(f.numerator(), v, vn), detail::lowest_part(f.denominator(), v, vd));
}

// ---------------------------------------------------------------------------
// substitution

using Substitution = std::map<VarId, RationalFunction>;

namespace detail {

class PowerCache {
 public:
  explicit PowerCache(IntPolynomial base) : base_(std::move(base)) {
    powers_.push_back(IntPolynomial::constant(BigInt(1)));
  }
  const IntPolynomial& get(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  IntPolynomial base_;
  std::vector<IntPolynomial> powers_;
};

struct Image {
  int max_degree = 0;
  bool monomial = false;
  PowerCache num, den;
};

inline IntPolynomial substitute_polynomial(const IntPolynomial& p, std::map<VarId, Image>& images) {
  IntPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    IntPolynomial term = IntPolynomial::constant(c);
    std::vector<std::pair<Image*, int>> used;
    for (const auto& [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) kept.emplace_back(v, e);
      else used.emplace_back(&it->second, e);
    }
    term = term.times_term(Monomial::from_range(kept.begin(), kept.end()), BigInt(1));
    std::vector<Image*> seen;
    for (auto& [img, e] : used) {
      seen.push_back(img);
      term = term * img->num.get(e);
      if (img->max_degree > e) term = term * img->den.get(img->max_degree - e);
    }
    // images of variables absent from this term still contribute D^M
    for (auto& [v, img] : images) {
      if (img.max_degree == 0) continue;
      if (std::find(seen.begin(), seen.end(), &img) == seen.end()) term = term * img.den.get(img.max_degree);
    }
    out += term;
  }
  return out;
}

struct FactorBag {
  BigRational scalar{1};
  std::vector<Monomial::Factor> mono;
  std::map<IntPolynomial, long> factors;

  void add(const IntPolynomial& p, long e) {
    if (e == 0) return;
    BigInt c = gcd_detail::content(p);
    if (p.leading_coefficient() < 0) c = -c;
    scalar *= pow(BigRational(c), e);
    Monomial m = p.monomial_content();
    for (const auto& [v, k] : m.factors()) mono.emplace_back(v, k * static_cast<int>(e));
    IntPolynomial rest = gcd_detail::divexact_scalar(p, c).divided_by_monomial(m);
    if (rest.is_constant()) return;
    long& slot = factors[rest];
    slot += e;
    if (slot == 0) factors.erase(rest);
  }

  RationalFunction build() const {
    IntPolynomial num = IntPolynomial::constant(BigInt(scalar.get_num()));
    IntPolynomial den = IntPolynomial::constant(BigInt(scalar.get_den()));
    Monomial m = Monomial::from_range(mono.begin(), mono.end());
    for (const auto& [v, e] : m.factors()) {
      if (e > 0) num = num.times_term(Monomial::of(v, e), BigInt(1));
      else den = den.times_term(Monomial::of(v, -e), BigInt(1));
    }
    for (const auto& [p, e] : factors) {
      if (e > 0) num = num * p.pow(static_cast<unsigned>(e));
      else den = den * p.pow(static_cast<unsigned>(-e));
    }
    return RationalFunction(num, den);
  }
};

}  // namespace detail

// Laurent-monomial inputs go through a factor bag so identical factors of
// the images cancel without any gcd.
inline RationalFunction substitute_monomial(const RationalFunction& f, const Substitution& s) {
  detail::FactorBag bag;
  auto collect = [&](const IntPolynomial& p, long sign) {
    const auto& [m, c] = *p.terms().begin();
    bag.scalar *= sign > 0 ? BigRational(c) : BigRational(1) / BigRational(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = s.find(v);
      if (it == s.end()) {
        bag.mono.emplace_back(v, static_cast<int>(sign * e));
      } else {
        const RationalFunction& img = it->second;
        if (img.is_zero()) {
          if (sign < 0) throw DivisionByZero("substitution makes a denominator vanish");
          bag.scalar = 0;
          return;
        }
        bag.add(img.numerator(), sign * e);
        bag.add(img.denominator(), -sign * e);
      }
    }
  };
  collect(f.denominator(), -1);
  if (bag.scalar == 0) throw DivisionByZero("substitution makes a denominator vanish");
  collect(f.numerator(), 1);
  if (bag.scalar == 0) return RationalFunction();
  return bag.build();
}

inline RationalFunction substitute(const RationalFunction& f, const Substitution& s) {
  if (f.is_zero()) return f;
  if (f.is_monomial()) return substitute_monomial(f, s);
  std::map<VarId, detail::Image> images;
  for (VarId v : f.variables()) {
    auto it = s.find(v);
    if (it == s.end()) continue;
    int md = std::max(f.numerator().degree_in(v), f.denominator().degree_in(v));
    detail::Image img{md, it->second.is_monomial(), detail::PowerCache(it->second.numerator()),
                      detail::PowerCache(it->second.denominator())};
    images.emplace(v, std::move(img));
  }
  IntPolynomial num = detail::substitute_polynomial(f.numerator(), images);
  IntPolynomial den = detail::substitute_polynomial(f.denominator(), images);
  if (den.is_zero()) throw DivisionByZero("substitution makes a denominator vanish");
  return RationalFunction(num, den);
}

// ---------------------------------------------------------------------------
// evaluation

using ExactPoint = std::map<VarId, BigRational>;
using NumericPoint = std::map<VarId, std::complex<double>>;

namespace detail {
template <class T, class Point>
T evaluate_polynomial(const IntPolynomial& p, const Point& point, std::map<VarId, std::vector<T>>& cache) {
  T sum = T(0);
  for (const auto& [m, c] : p.terms()) {
    T term;
    if constexpr (std::is_same_v<T, BigRational>) term = BigRational(c);
    else term = T(c.get_d());
    for (const auto& [v, e] : m.factors()) {
      auto& pw = cache[v];
      if (pw.empty()) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("no value for variable " + var_name(v));
        pw.push_back(T(1));
        pw.push_back(it->second);
      }
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * pw[1]);
      term *= pw[e];
    }
    sum += term;
  }
  return sum;
}
}  // namespace detail

inline std::optional<BigRational> eval_exact(const RationalFunction& f, const ExactPoint& point) {
  std::map<VarId, std::vector<BigRational>> cache;
  BigRational d = detail::evaluate_polynomial<BigRational>(f.denominator(), point, cache);
  if (d == 0) return std::nullopt;
  BigRational n = detail::evaluate_polynomial<BigRational>(f.numerator(), point, cache);
  return BigRational(n / d);
}

inline std::complex<double> eval_numeric(const RationalFunction& f, const NumericPoint& point,
                                         double pole_tolerance = 1e-300) {
  std::map<VarId, std::vector<std::complex<double>>> cache;
  auto d = detail::evaluate_polynomial<std::complex<double>>(f.denominator(), point, cache);
  if (std::abs(d) < pole_tolerance) throw PoleAtPoint();
  auto n = detail::evaluate_polynomial<std::complex<double>>(f.numerator(), point, cache);
  return n / d;
}

}  // namespace qgarnier

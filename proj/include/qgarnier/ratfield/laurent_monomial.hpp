#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "rational_function.hpp"

namespace qgarnier {

// c * prod v^e with integer (possibly negative) exponents; used for roots.
class LaurentMonomial {
 public:
  LaurentMonomial() = default;
  LaurentMonomial(BigRational coeff, Monomial exps) : coeff_(std::move(coeff)), exps_(std::move(exps)) {
    if (coeff_ == 0) throw std::invalid_argument("Laurent monomial with zero coefficient");
  }

  static LaurentMonomial variable(VarId v, int e = 1) { return {BigRational(1), Monomial::of(v, e)}; }

  static std::optional<LaurentMonomial> from(const RationalFunction& f) {
    RationalFunction r = f.reduced();
    if (!r.is_monomial()) return std::nullopt;
    const auto& [mn, cn] = *r.numerator().terms().begin();
    const auto& [md, cd] = *r.denominator().terms().begin();
    BigRational c(cn, cd);
    c.canonicalize();
    return LaurentMonomial(c, mn / md);
  }

  const BigRational& coeff() const { return coeff_; }
  const Monomial& exponents() const { return exps_; }
  int exponent(VarId v) const { return exps_.exponent(v); }

  LaurentMonomial operator*(const LaurentMonomial& o) const { return {coeff_ * o.coeff_, exps_ * o.exps_}; }
  LaurentMonomial operator/(const LaurentMonomial& o) const { return {coeff_ / o.coeff_, exps_ / o.exps_}; }
  LaurentMonomial pow(int k) const { return {qgarnier::pow(coeff_, k), exps_.pow(k)}; }
  LaurentMonomial inverse() const { return pow(-1); }

  RationalFunction to_rational_function() const { return RationalFunction::monomial(exps_, coeff_); }

  friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b) {
    return a.coeff_ == b.coeff_ && a.exps_ == b.exps_;
  }

  std::string to_string() const {
    std::string m = exps_.to_string();
    if (coeff_ == 1) return m;
    if (exps_.is_one()) return qgarnier::to_string(coeff_);
    return qgarnier::to_string(coeff_) + "*" + m;
  }

 private:
  BigRational coeff_{1};
  Monomial exps_;
};

}  // namespace qgarnier

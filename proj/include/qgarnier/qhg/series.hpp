#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgarnier {

class NoConvergence : public std::runtime_error {
 public:
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

class BadParameters : public std::invalid_argument {
 public:
  explicit BadParameters(const std::string& what) : std::invalid_argument(what) {}
};

// (a;q)_n = prod_{i=1}^{n} (1 - a q^{i-1})
template <class T>
T qpoch(const T& a, const T& q, int n) {
  if (n < 0) throw std::invalid_argument("qpoch needs n >= 0");
  T r(1), aq(a);
  for (int i = 0; i < n; ++i) {
    r *= T(1) - aq;
    aq *= q;
  }
  return r;
}

// r_phi_s [upper; lower; q, t] with the extra factor [(-1)^n q^{n(n-1)/2}]^{1+s-r}.
template <class T>
struct PhiSpec {
  std::vector<T> upper;
  std::vector<T> lower;
  T q;
  T t;
  double tol = 1e-16;
  int max_terms = 10000;
};

template <class T>
struct PhiResult {
  T value;
  int terms = 0;
};

namespace series_detail {

using std::abs;

template <class T>
double magnitude(const T& x) {
  return static_cast<double>(abs(x));
}

}  // namespace series_detail

// term(n+1)/term(n), with qn = q^n
template <class T>
T phi_term_ratio(const PhiSpec<T>& s, const T& qn) {
  T num(1), den(1);
  for (const T& a : s.upper) num *= T(1) - a * qn;
  for (const T& b : s.lower) den *= T(1) - b * qn;
  den *= T(1) - qn * s.q;
  if (den == T(0)) throw BadParameters("a lower parameter hits q^-m");
  T r = num / den * s.t;
  int extra = 1 + static_cast<int>(s.lower.size()) - static_cast<int>(s.upper.size());
  T f = -qn;
  for (int k = 0; k < (extra < 0 ? -extra : extra); ++k) r = extra > 0 ? T(r * f) : T(r / f);
  return r;
}

// Sums until three consecutive terms fall below tol * (|partial sum| + 1).
template <class T>
PhiResult<T> phi_detailed(const PhiSpec<T>& s) {
  T sum(1), term(1), qn(1);
  int small = 0;
  for (int n = 0; n < s.max_terms; ++n) {
    term *= phi_term_ratio(s, qn);
    qn *= s.q;
    sum += term;
    if (series_detail::magnitude(term) < s.tol * (series_detail::magnitude(sum) + 1)) {
      if (++small == 3) return {sum, n + 2};
    } else {
      small = 0;
    }
  }
  throw NoConvergence("series not converged after " + std::to_string(s.max_terms) + " terms");
}

template <class T>
T phi(const PhiSpec<T>& s) {
  return phi_detailed(s).value;
}

}  // namespace qgarnier

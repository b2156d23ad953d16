#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "series.hpp"

namespace qgarnier {

enum class HgCase { Q12, Q11, Q101, Q102 };

inline const char* to_string(HgCase c) {
  switch (c) {
    case HgCase::Q12: return "Q12";
    case HgCase::Q11: return "Q11";
    case HgCase::Q101: return "Q101";
    case HgCase::Q102: return "Q102";
  }
  return "?";
}

inline HgCase parse_case(std::string_view s) {
  if (s == "Q12") return HgCase::Q12;
  if (s == "Q11") return HgCase::Q11;
  if (s == "Q101") return HgCase::Q101;
  if (s == "Q102") return HgCase::Q102;
  throw BadParameters("no linear system for " + std::string(s));
}

inline const std::vector<HgCase>& all_cases() {
  static const std::vector<HgCase> c{HgCase::Q12, HgCase::Q11, HgCase::Q101, HgCase::Q102};
  return c;
}

inline int parameter_count(HgCase c) {
  switch (c) {
    case HgCase::Q12: return 6;
    case HgCase::Q11: return 5;
    default: return 4;
  }
}

template <class T>
using Matrix3 = std::array<std::array<T, 3>, 3>;

template <class T>
using Vector3 = std::array<T, 3>;

// alpha_0.., with q = prod alpha_i
template <class T>
struct HgParameters {
  std::vector<T> alpha;
  T q;
};

namespace hg_detail {

using std::abs;

template <class T>
T product(const std::vector<T>& v) {
  T r(1);
  for (const T& x : v) r *= x;
  return r;
}

template <class T>
struct real_of {
  using type = T;
};
template <class T>
struct real_of<std::complex<T>> {
  using type = T;
};

template <class T>
void check(HgCase c, const HgParameters<T>& p) {
  if (static_cast<int>(p.alpha.size()) != parameter_count(c))
    throw BadParameters(std::string(to_string(c)) + " needs " + std::to_string(parameter_count(c)) + " parameters");
  if (!(abs(p.q) < 1)) throw BadParameters("|q| must be below 1");
  double scale = std::max(1.0, static_cast<double>(abs(p.q)));
  double eps = static_cast<double>(std::numeric_limits<typename real_of<T>::type>::epsilon());
  if (static_cast<double>(abs(product(p.alpha) - p.q)) > 1e3 * eps * scale)
    throw BadParameters("q differs from the product of the parameters");
}

}  // namespace hg_detail

// The last parameter is solved from q = prod alpha_i.
template <class T>
HgParameters<T> make_parameters(HgCase c, const T& q, std::vector<T> head) {
  if (static_cast<int>(head.size()) < parameter_count(c) - 1)
    throw BadParameters("too few parameters for " + std::string(to_string(c)));
  head.resize(parameter_count(c) - 1);
  T last = q / hg_detail::product(head);
  head.push_back(last);
  return {head, q};
}

// q = 0.4 with alpha_0.. = 0.3, 0.7, 0.5, 0.6, 0.8 truncated to the case
template <class T = double>
HgParameters<T> standard_parameters(HgCase c) {
  return make_parameters<T>(c, T(0.4), {T(0.3), T(0.7), T(0.5), T(0.6), T(0.8)});
}

inline const std::vector<double>& standard_times() {
  static const std::vector<double> t{0.02, 0.05, 0.08};
  return t;
}

template <class T>
struct LinearQSystem {
  HgCase which;
  Matrix3<T> A0;
  Matrix3<T> A1;
  bool pencil = false;  // M(t) = (A0 + t A1)/(1 - t) instead of A0 + t A1

  Matrix3<T> at(const T& t) const {
    Matrix3<T> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m[i][j] = A0[i][j] + t * A1[i][j];
        if (pencil) m[i][j] /= T(1) - t;
      }
    return m;
  }
};

template <class T>
LinearQSystem<T> build_system(HgCase c, const HgParameters<T>& p) {
  hg_detail::check(c, p);
  const auto& a = p.alpha;
  const T one(1), zero(0), q = p.q, w = one - q;
  LinearQSystem<T> s{c, {}, {}, false};
  switch (c) {
    case HgCase::Q12:
      s.pencil = true;
      s.A0 = {{{one, zero, zero},
               {one - a[5], a[0] * a[5], zero},
               {one - a[5], a[0] * a[5] * (one - a[1]), a[0] * a[1] * a[2] * a[5]}}};
      s.A1 = {{{-a[5], a[0] * a[5] * (one - a[1]), a[0] * a[1] * a[2] * a[5] * (one - a[3])},
               {zero, -a[0] * a[1] * a[5], a[0] * a[1] * a[2] * a[5] * (one - a[3])},
               {zero, zero, -a[0] * a[1] * a[2] * a[3] * a[5]}}};
      break;
    case HgCase::Q11:
      s.A0 = {{{one, zero, zero}, {w * a[0], a[0], zero}, {w * a[0], a[0] * (one - a[1]), a[0] * a[1] * a[2]}}};
      s.A1 = {{{-a[0], -a[0] * (one - a[1]) / w, -a[0] * a[1] * a[2] * (one - a[3]) / w},
               {zero, zero, zero},
               {zero, zero, zero}}};
      break;
    case HgCase::Q101:
      s.A0 = {{{one, zero, zero}, {w * a[0], a[0], zero}, {zero, w * a[0] * a[1], a[0] * a[1]}}};
      s.A1 = {{{zero, a[0] * a[1] / w, a[0] * a[1] * (one - a[2]) / (w * w)}, {zero, zero, zero}, {zero, zero, zero}}};
      break;
    case HgCase::Q102:
      s.A0 = {{{one, zero, zero}, {w * a[0], a[0], zero}, {w * w * a[0], w * a[0], a[0] * a[1]}}};
      s.A1 = {{{-a[0], -a[0] / w, -a[0] * a[1] * (one - a[2]) / (w * w)}, {zero, zero, zero}, {zero, zero, zero}}};
      break;
  }
  return s;
}

// The particular solution (x0, x1, x2)(t) of the case's system.
template <class T>
Vector3<T> solution(HgCase c, const HgParameters<T>& p, const T& t, double tol = 1e-16) {
  hg_detail::check(c, p);
  const auto& a = p.alpha;
  const T one(1), zero(0), q = p.q, w = one - q;
  auto f = [&](std::vector<T> up, std::vector<T> low, T arg) {
    return phi(PhiSpec<T>{std::move(up), std::move(low), q, arg, tol, 10000});
  };
  switch (c) {
    case HgCase::Q12: {
      T u0 = a[5], u1 = a[0] * a[1] * a[5], u2 = a[0] * a[1] * a[2] * a[3] * a[5];
      T l0 = a[0] * a[5], l1 = a[0] * a[1] * a[2] * a[5];
      T arg = q * t;
      return {f({u0, u1, u2}, {l0, l1}, arg),
              (one - u0) / (one - l0) * f({q * u0, u1, u2}, {q * l0, l1}, arg),
              (one - u0) * (one - u1) / ((one - l0) * (one - l1)) * f({q * u0, q * u1, u2}, {q * l0, q * l1}, arg)};
    }
    case HgCase::Q11: {
      T u0 = a[0] * a[1], u1 = a[0] * a[1] * a[2] * a[3];
      T l0 = a[0], l1 = a[0] * a[1] * a[2];
      return {f({u0, u1}, {l0, l1}, q * a[0] * t),
              w * a[0] / (one - a[0]) * f({u0, u1}, {q * l0, l1}, q * q * a[0] * t),
              w * a[0] * (one - u0) / ((one - a[0]) * (one - l1)) * f({q * u0, u1}, {q * l0, q * l1}, q * q * a[0] * t)};
    }
    case HgCase::Q101: {
      T u = a[0] * a[1] * a[2], l0 = a[0], l1 = a[0] * a[1];
      T arg = a[0] * a[0] * a[1] * t;
      return {f({u}, {l0, l1}, q * arg), w * a[0] / (one - a[0]) * f({u}, {q * l0, l1}, q * q * arg),
              w * w * a[0] * a[0] * a[1] / ((one - a[0]) * (one - l1)) * f({u}, {q * l0, q * l1}, q * q * q * arg)};
    }
    case HgCase::Q102: {
      T u = a[0] * a[1] * a[2], l0 = a[0], l1 = a[0] * a[1];
      return {f({zero, u}, {l0, l1}, q * a[0] * t),
              w * a[0] / (one - a[0]) * f({zero, u}, {q * l0, l1}, q * q * a[0] * t),
              w * w * a[0] / ((one - a[0]) * (one - l1)) * f({zero, u}, {q * l0, q * l1}, q * q * a[0] * t)};
    }
  }
  throw BadParameters("unknown case");
}

// max_i |x_i(t/q) - (M(t) x(t))_i|
template <class T>
T verify_linear(HgCase c, const HgParameters<T>& p, const T& t, double tol = 1e-16) {
  using std::abs;
  auto m = build_system(c, p).at(t);
  auto x = solution(c, p, t, tol);
  auto xs = solution(c, p, T(t / p.q), tol);
  T worst(0);
  for (int i = 0; i < 3; ++i) {
    T r = xs[i];
    for (int j = 0; j < 3; ++j) r -= m[i][j] * x[j];
    if (abs(r) > abs(worst)) worst = abs(r);
  }
  return worst;
}

// The coefficients y_k attached to a solution vector at time t, as printed
// alongside each solution.
template <class T>
std::map<int, T> proposition_values(HgCase c, const HgParameters<T>& p, const Vector3<T>& x, const T& t) {
  const auto& a = p.alpha;
  const T one(1), q = p.q;
  std::map<int, T> y{{1, -x[0] / x[1]}, {3, -one}, {5, -x[1] / x[2]}, {7, -one}};
  switch (c) {
    case HgCase::Q12:
      y[2] = -a[0] * x[1] / x[0];
      y[4] = -a[1];
      y[6] = -a[2] * x[2] / x[1];
      y[8] = -a[3];
      y[9] = -q * t * x[2] / x[0];
      y[10] = -a[4] * x[0] / (q * t * x[2]);
      y[11] = -one;
      y[12] = -a[5];
      break;
    case HgCase::Q11:
      y[2] = a[0] * x[1] / x[0];
      y[4] = -a[1];
      y[6] = -a[2] * x[2] / x[1];
      y[8] = -a[3];
      y[9] = q * t * x[2] / x[0];
      y[10] = a[4] * x[0] / (q * t * x[2]);
      y[11] = -one;
      break;
    case HgCase::Q101:
      y[2] = a[0] * x[1] / x[0];
      y[4] = -one;
      y[6] = a[1] * x[2] / x[1];
      y[8] = -a[2];
      y[9] = -q * t * x[2] / x[0];
      y[10] = -a[3] * x[0] / (q * t * x[2]);
      break;
    case HgCase::Q102:
      y[2] = a[0] * x[1] / x[0];
      y[4] = a[1] * x[2] / x[1];
      y[6] = -one;
      y[8] = -a[2];
      y[9] = -q * t * x[2] / x[0];
      y[10] = -a[3] * x[0] / (q * t * x[2]);
      break;
  }
  return y;
}

// Constant factors taking the printed coefficients of the degenerate cases to
// the limits of the Q12 solution under the confluences 12->1, 4->5 and 6->4
// (with the same parameter and time replacements as the linear systems).
// Only these satisfy the tau_c maps; the printed ones do not.
template <class T>
std::map<int, T> confluence_gauge(HgCase c, const HgParameters<T>& p) {
  const auto& a = p.alpha;
  const T w = T(1) - p.q;
  switch (c) {
    case HgCase::Q12: return {};
    case HgCase::Q11: return {{1, w * a[0]}, {2, T(1) / (w * a[0])}, {9, T(1) / w}, {10, w}};
    case HgCase::Q101:
      return {{1, w * a[0]}, {2, T(1) / (w * a[0])}, {5, w * a[1]}, {6, T(1) / (w * a[1])},
              {9, T(1) / (w * w)}, {10, w * w}};
    case HgCase::Q102:
      return {{1, w * a[0]}, {2, T(1) / (w * a[0])}, {4, T(1) / w}, {5, w}, {9, T(-1) / (w * w)}, {10, -w * w}};
  }
  return {};
}

// Coefficients on the Riccati chart that the solution actually drives.
template <class T>
std::map<int, T> riccati_values(HgCase c, const HgParameters<T>& p, const Vector3<T>& x, const T& t) {
  auto y = proposition_values(c, p, x, t);
  for (const auto& [k, f] : confluence_gauge(c, p)) y[k] *= f;
  return y;
}

}  // namespace qgarnier

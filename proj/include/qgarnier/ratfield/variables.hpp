#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qgarnier {

// Variable ids: y1..y99 are coefficients, a0..a99 parameters, then the
// reserved symbols eps, t and q.
using VarId = std::uint16_t;

namespace var {

inline constexpr VarId y(int k) { return static_cast<VarId>(k); }
inline constexpr VarId alpha(int i) { return static_cast<VarId>(100 + i); }
inline constexpr VarId eps = 200;
inline constexpr VarId t = 201;
inline constexpr VarId q = 202;

inline constexpr bool is_coefficient(VarId v) { return v >= 1 && v < 100; }
inline constexpr bool is_parameter(VarId v) { return v >= 100 && v < 200; }

}  // namespace var

inline std::string var_name(VarId v) {
  if (var::is_coefficient(v)) return "y" + std::to_string(v);
  if (var::is_parameter(v)) return "a" + std::to_string(v - 100);
  switch (v) {
    case var::eps: return "eps";
    case var::t: return "t";
    case var::q: return "q";
    default: return "v" + std::to_string(v);
  }
}

inline std::optional<VarId> parse_var_name(std::string_view s) {
  if (s == "eps") return var::eps;
  if (s == "t") return var::t;
  if (s == "q") return var::q;
  if (s.size() < 2) return std::nullopt;
  char head = s.front();
  if (head != 'y' && head != 'a' && head != 'v') return std::nullopt;
  int value = 0;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
    if (value > 60000) return std::nullopt;
  }
  if (head == 'y') {
    if (value < 1 || value >= 100) return std::nullopt;
    return static_cast<VarId>(value);
  }
  if (head == 'a') {
    if (value >= 100) return std::nullopt;
    return var::alpha(value);
  }
  return static_cast<VarId>(value);
}

}  // namespace qgarnier

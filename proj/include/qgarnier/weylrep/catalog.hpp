#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../quiver/catalog.hpp"
#include "representation.hpp"

namespace qgarnier {

namespace catalog_detail {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

inline std::string q_power(int e, const std::string& root) {
  if (e == 0) return root;
  return "q^" + std::to_string(e) + " " + root;
}

class Builder {
 public:
  Builder(std::string name) {
    rep_.name = name;
    rep_.quiver = catalog_quiver(name);
  }

  Builder& generator(const std::string& g, const std::string& text) {
    rep_.generator_order.push_back(g);
    rep_.generators[g] = parse_word(text);
    rep_.generators[g].name = g;
    return *this;
  }

  Builder& translation(const std::string& t, const std::string& text) {
    rep_.translation_order.push_back(t);
    rep_.translations[t] = text;
    return *this;
  }

  Builder& root(const std::string& r, const std::string& monomial) {
    rep_.root_order.push_back(r);
    rep_.roots.emplace(r, root_monomial(monomial));
    return *this;
  }

  Builder& family(const std::string& gen, const std::string& root, CartanMatrix c) {
    rep_.families.push_back({gen, root, std::move(c)});
    return *this;
  }

  Builder& invariant(const std::string& r) {
    rep_.reflection_invariant.push_back(r);
    return *this;
  }

  Builder& row(const std::string& element, const std::string& root, const std::string& image) {
    rep_.table.push_back({element, root, image});
    return *this;
  }

  // rows "element: root -> image" for a list of pairs
  Builder& rows(const std::string& element, const std::vector<std::pair<std::string, std::string>>& images) {
    for (const auto& [r, img] : images) row(element, r, img);
    return *this;
  }

  Builder& identity(std::vector<std::string> group) {
    rep_.root_identities.push_back(std::move(group));
    return *this;
  }

  Builder& decomposition(const std::string& lhs, const std::string& rhs) {
    rep_.decompositions.push_back({lhs, rhs});
    return *this;
  }

  // g_i(r_j) = r_j r_i^{-a_ij}; every root outside the family, and q, is fixed
  Builder& reflection_rows() {
    for (const auto& f : rep_.families) {
      for (int i : f.labels()) {
        for (int j : f.labels()) {
          int a = f.cartan(i, j);
          std::string img = i == j ? f.root(i) + "^-1"
                                   : (a == 0 ? f.root(j) : f.root(j) + " " + f.root(i) + "^" + std::to_string(-a));
          row(f.generator(i), f.root(j), img);
        }
        for (const auto& other : rep_.families)
          if (&other != &f)
            for (int l : other.labels()) row(f.generator(i), other.root(l), other.root(l));
        for (const auto& g : rep_.reflection_invariant) row(f.generator(i), g, g);
        if (rep_.has_root("q")) row(f.generator(i), "q", "q");
      }
    }
    return *this;
  }

  // T_i(a_j) = q^{-d(j,i-1)+2d(j,i)-d(j,i+1)} a_j, indices mod m, and the listed roots fixed
  Builder& t_rows(int m, const std::vector<std::string>& fixed) {
    for (int i = 0; i < m; ++i) {
      std::string t = "T" + std::to_string(i);
      for (int j = 0; j < m; ++j) {
        int e = (j == mod(i - 1, m) ? -1 : 0) + (j == i ? 2 : 0) + (j == mod(i + 1, m) ? -1 : 0);
        row(t, "a" + std::to_string(j), q_power(e, "a" + std::to_string(j)));
      }
      for (const auto& r : fixed) row(t, r, r);
    }
    return *this;
  }

  // U_k(b_l) = q^{4 d(l,k) - 2} b_l for the pair (prefix0, prefix1)
  Builder& u_rows(const std::string& u, const std::string& b, const std::vector<std::string>& fixed) {
    for (int k = 0; k < 2; ++k) {
      std::string name = u + std::to_string(k);
      for (int l = 0; l < 2; ++l) row(name, b + std::to_string(l), q_power(l == k ? 2 : -2, b + std::to_string(l)));
      for (const auto& r : fixed) row(name, r, r);
    }
    return *this;
  }

  // x_0 -> q x_0, x_1 -> q^-1 x_1, the other x fixed
  Builder& shift_rows(const std::string& element, const std::string& prefix, int count) {
    for (int j = 0; j < count; ++j) {
      int e = j == 0 ? 1 : (j == 1 ? -1 : 0);
      row(element, prefix + std::to_string(j), q_power(e, prefix + std::to_string(j)));
    }
    return *this;
  }

  Builder& fixed_rows(const std::string& element, const std::vector<std::string>& fixed) {
    for (const auto& r : fixed) row(element, r, r);
    return *this;
  }

  Representation build() { return std::move(rep_); }

 private:
  Representation rep_;
};

inline std::vector<std::string> names(const std::string& prefix, int from, int to) {
  std::vector<std::string> v;
  for (int i = from; i <= to; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

inline std::vector<std::string> join(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// r_i r_{i+1} ... r_{i+m-1} r_{i+m-2} ... r_{i+1}, indices mod m
inline std::string affine_translation(int i, int m) {
  std::string s;
  for (int k = 0; k < m; ++k) s += "r" + std::to_string(mod(i + k, m)) + " ";
  for (int k = m - 2; k >= 1; --k) s += "r" + std::to_string(mod(i + k, m)) + " ";
  s.pop_back();
  return s;
}

inline std::string all_roots_product(const std::string& prefix, int from, int to) {
  std::string s;
  for (int i = from; i <= to; ++i) s += (s.empty() ? "" : " ") + prefix + std::to_string(i);
  return s;
}

inline std::string all_y(int n) {
  std::string s;
  for (int k = 1; k <= n; ++k) s += (s.empty() ? "" : "*") + std::string("y") + std::to_string(k);
  return s;
}

// m{v}({v},{w})m{v}
inline std::string simple_flip(int v, int w) {
  return "m" + std::to_string(v) + "(" + std::to_string(v) + "," + std::to_string(w) + ")m" + std::to_string(v);
}

}  // namespace catalog_detail

inline Representation representation_q12() {
  using namespace catalog_detail;
  Builder b("Q12");
  for (int i = 0; i <= 5; ++i) b.generator("r" + std::to_string(i), simple_flip(2 * i + 1, 2 * i + 2));
  b.generator("s0", "m1m4m5m8m9(9,12)m9m8m5m4m1")
      .generator("s1", "m2m3m6m7m10(10,11)m10m7m6m3m2")
      .generator("sp0", "m1m3m5m7m9(9,11)m9m7m5m3m1")
      .generator("sp1", "m2m4m6m8m10(10,12)m10m8m6m4m2")
      .generator("pi1", "(2,4,6,8,10,12)(1,3,5,7,9,11)")
      .generator("pi2", "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)")
      .generator("pi3", "iota(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)");
  for (int i = 0; i <= 5; ++i)
    b.root("a" + std::to_string(i), "y" + std::to_string(2 * i + 1) + "*y" + std::to_string(2 * i + 2));
  b.root("b0", "y1*y4*y5*y8*y9*y12")
      .root("b1", "y2*y3*y6*y7*y10*y11")
      .root("bp0", "y1*y3*y5*y7*y9*y11")
      .root("bp1", "y2*y4*y6*y8*y10*y12")
      .root("q", all_y(12));
  b.family("r", "a", affine_a(5)).family("s", "b", affine_a(1)).family("sp", "bp", affine_a(1)).reflection_rows();

  for (int i = 0; i <= 5; ++i) b.translation("T" + std::to_string(i), affine_translation(i, 6));
  b.translation("U0", "s0 s1")
      .translation("U1", "s1 s0")
      .translation("Up0", "sp0 sp1")
      .translation("Up1", "sp1 sp0")
      .translation("V", "pi1 r5 r4 r3 r2 r1 s1")
      .translation("Vp", "pi2 pi1 r5 r4 r3 r2 r1 sp1")
      .translation("tau_c", "pi2 sp0 s0");

  b.rows("pi1", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a5"}, {"a5", "a0"},
                 {"b0", "b1"}, {"b1", "b0"}, {"bp0", "bp0"}, {"bp1", "bp1"}, {"q", "q"}});
  b.rows("pi2", {{"a0", "a0"}, {"a1", "a1"}, {"a2", "a2"}, {"a3", "a3"}, {"a4", "a4"}, {"a5", "a5"},
                 {"b0", "b1"}, {"b1", "b0"}, {"bp0", "bp1"}, {"bp1", "bp0"}, {"q", "q"}});
  b.rows("pi3", {{"a0", "a5^-1"}, {"a1", "a4^-1"}, {"a2", "a3^-1"}, {"a3", "a2^-1"}, {"a4", "a1^-1"},
                 {"a5", "a0^-1"}, {"b0", "b0^-1"}, {"b1", "b1^-1"}, {"bp0", "bp1^-1"}, {"bp1", "bp0^-1"},
                 {"q", "q^-1"}});

  const auto a = names("a", 0, 5), bs = names("b", 0, 1), bps = names("bp", 0, 1);
  b.t_rows(6, join(bs, bps));
  b.u_rows("U", "b", join(a, bps)).u_rows("Up", "bp", join(a, bs));
  b.shift_rows("V", "a", 6).shift_rows("V", "b", 2).fixed_rows("V", bps);
  b.shift_rows("Vp", "a", 6).fixed_rows("Vp", bs).shift_rows("Vp", "bp", 2);
  b.fixed_rows("tau_c", a).rows("tau_c", {{"b0", "q^-1 b0"}, {"b1", "q b1"}, {"bp0", "q^-1 bp0"}, {"bp1", "q bp1"}});

  b.identity({all_roots_product("a", 0, 5), "b0 b1", "bp0 bp1", "q"});
  b.decomposition("Vp^-1 V U1", "tau_c").decomposition("m1 (1,2) m1", "m2 (1,2) m2");
  return b.build();
}

inline Representation representation_q11() {
  using namespace catalog_detail;
  Builder b("Q11");
  b.generator("r0", "m1m2(2,11)m2m1");
  for (int i = 1; i <= 4; ++i) b.generator("r" + std::to_string(i), simple_flip(2 * i + 1, 2 * i + 2));
  b.generator("s0", "m1m4m5m8(8,9)m8m5m4m1")
      .generator("s1", "m2m3m6m7m10(10,11)m10m7m6m3m2")
      .generator("pi1", "(1,3,5,7,9,11,2,4,6,8,10)m2")
      .generator("pi2", "iota(2,11)(3,10)(4,9)(5,8)(6,7)");
  b.root("a0", "y1*y2*y11");
  for (int i = 1; i <= 4; ++i)
    b.root("a" + std::to_string(i), "y" + std::to_string(2 * i + 1) + "*y" + std::to_string(2 * i + 2));
  b.root("b0", "y1*y4*y5*y8*y9")
      .root("b1", "y2*y3*y6*y7*y10*y11")
      .root("g", "y2^5*y4^4*y6^3*y8^2*y10/(y3*y5^2*y7^3*y9^4*y11^5)")
      .root("q", all_y(11));
  b.family("r", "a", affine_a(4)).family("s", "b", affine_a(1)).invariant("g").reflection_rows();

  for (int i = 0; i <= 4; ++i) b.translation("T" + std::to_string(i), affine_translation(i, 5));
  b.translation("U0", "s0 s1")
      .translation("U1", "s1 s0")
      .translation("V", "pi1 r4 r3 r2 r1 s1")
      .translation("Vp", "pi1^5 s1")
      .translation("tau_c", "pi1^5 s0");

  b.rows("pi1", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a0"},
                 {"b0", "b1"}, {"b1", "b0"}, {"g", "q g"}, {"q", "q"}});
  b.rows("pi2", {{"a0", "a0^-1"}, {"a1", "a4^-1"}, {"a2", "a3^-1"}, {"a3", "a2^-1"}, {"a4", "a1^-1"},
                 {"b0", "b0^-1"}, {"b1", "b1^-1"}, {"g", "g"}, {"q", "q^-1"}});

  const auto a = names("a", 0, 4), bs = names("b", 0, 1);
  b.t_rows(5, join(bs, {"g"}));
  b.u_rows("U", "b", join(a, {"g"}));
  b.shift_rows("V", "a", 5).shift_rows("V", "b", 2).row("V", "g", "q g");
  b.fixed_rows("Vp", a).shift_rows("Vp", "b", 2).row("Vp", "g", "q^5 g");
  b.fixed_rows("tau_c", a).rows("tau_c", {{"b0", "q^-1 b0"}, {"b1", "q b1"}, {"g", "q^5 g"}});

  b.identity({all_roots_product("a", 0, 4), "b0 b1", "q"});
  b.decomposition("Vp U1", "tau_c").decomposition("m1 m2 (2,11) m2 m1", "m2 m1 (11,1) m1 m2");
  return b.build();
}

inline Representation representation_q101() {
  using namespace catalog_detail;
  Builder b("Q101");
  b.generator("r0", "m1m2(2,4)m2m1")
      .generator("r1", "m3m5(5,6)m5m3")
      .generator("r2", "m7(7,8)m7")
      .generator("r3", "m9(9,10)m9")
      .generator("s0", "m1m5m8(8,9)m8m5m1")
      .generator("s1", "m2m3m6m7m10(10,4)m10m7m6m3m2")
      .generator("pi1", "(1,3,6,8,10)(2,5,7,9,4)m2m6")
      .generator("pi2", "(1,7)(2,8)(3,9)(4,6)(5,10)m4m6")
      .generator("pi3", "iota(2,4)(3,10)(5,9)(6,8)m8m6");
  b.root("a0", "y1*y2*y4")
      .root("a1", "y3*y5*y6")
      .root("a2", "y7*y8")
      .root("a3", "y9*y10")
      .root("b0", "y1*y5*y8*y9")
      .root("b1", "y2*y3*y4*y6*y7*y10")
      .root("g", "y2^2*y5*y6^3*y8^2*y10/(y3*y4^2*y9)")
      .root("q", all_y(10));
  b.family("r", "a", affine_a(3)).family("s", "b", affine_a(1)).invariant("g").reflection_rows();

  for (int i = 0; i <= 3; ++i) b.translation("T" + std::to_string(i), affine_translation(i, 4));
  b.translation("U0", "s0 s1")
      .translation("U1", "s1 s0")
      .translation("V", "pi1 r3 r2 r1 s1")
      .translation("Vp", "pi2 pi1^2 s1")
      .translation("tau_c", "pi2 pi1^2 s0");

  b.rows("pi1", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a0"}, {"b0", "b1"}, {"b1", "b0"},
                 {"g", "q g"}, {"q", "q"}});
  b.rows("pi2", {{"a0", "a2"}, {"a1", "a3"}, {"a2", "a0"}, {"a3", "a1"}, {"b0", "b1"}, {"b1", "b0"},
                 {"g", "g"}, {"q", "q"}});
  b.rows("pi3", {{"a0", "a0^-1"}, {"a1", "a3^-1"}, {"a2", "a2^-1"}, {"a3", "a1^-1"}, {"b0", "b0^-1"},
                 {"b1", "b1^-1"}, {"g", "g"}, {"q", "q^-1"}});

  const auto a = names("a", 0, 3), bs = names("b", 0, 1);
  b.t_rows(4, join(bs, {"g"}));
  b.u_rows("U", "b", join(a, {"g"}));
  b.shift_rows("V", "a", 4).shift_rows("V", "b", 2).row("V", "g", "q g");
  b.fixed_rows("Vp", a).shift_rows("Vp", "b", 2).row("Vp", "g", "q^2 g");
  b.fixed_rows("tau_c", a).rows("tau_c", {{"b0", "q^-1 b0"}, {"b1", "q b1"}, {"g", "q^2 g"}});

  b.identity({all_roots_product("a", 0, 3), "b0 b1", "q"});
  b.decomposition("Vp U1", "tau_c");
  return b.build();
}

inline Representation representation_q102() {
  using namespace catalog_detail;
  Builder b("Q102");
  b.generator("r0", "m1m2(2,6)m2m1")
      .generator("r1", "m3m4(4,5)m4m3")
      .generator("r2", "m7(7,8)m7")
      .generator("r3", "m9(9,10)m9")
      .generator("pi1", "iota(1,3)(4,6)(5,9)(7,10)m9m8m2m5")
      .generator("pi2", "iota(1,7)(2,4)(3,5)(6,8)(9,10)m4m2")
      .generator("pi3", "(1,7)(2,5)(3,4)(6,8)m5m2");
  b.root("a0", "y1*y2*y6")
      .root("a1", "y3*y4*y5")
      .root("a2", "y7*y8")
      .root("a3", "y9*y10")
      .root("g1", "y2^2*y3*y4*y10/(y5*y9)")
      .root("g2", "y1*y2*y4^2*y5^2*y8^3/(y3^2*y6^3*y7)")
      .root("q", all_y(10));
  b.family("r", "a", affine_a(3)).invariant("g1").invariant("g2").reflection_rows();

  for (int i = 0; i <= 3; ++i) b.translation("T" + std::to_string(i), affine_translation(i, 4));
  b.translation("U", "pi2 pi1 r3 r2 r1")
      .translation("V", "(pi3 pi2 pi1)^2")
      .translation("Vp", "(pi1 pi3)^4")
      .translation("tau_c", "V");

  b.rows("pi1", {{"a0", "a1^-1"}, {"a1", "a0^-1"}, {"a2", "a3^-1"}, {"a3", "a2^-1"}, {"g1", "q^-1 g1"},
                 {"g2", "q g2"}, {"q", "q^-1"}});
  b.rows("pi2", {{"a0", "a2^-1"}, {"a1", "a1^-1"}, {"a2", "a0^-1"}, {"a3", "a3^-1"}, {"g1", "g1"},
                 {"g2", "g2"}, {"q", "q^-1"}});
  b.rows("pi3", {{"a0", "a2"}, {"a1", "a1"}, {"a2", "a0"}, {"a3", "a3"}, {"g1", "g1"}, {"g2", "g2^-1"},
                 {"q", "q"}});

  const auto a = names("a", 0, 3);
  b.t_rows(4, {"g1", "g2"});
  b.shift_rows("U", "a", 4).rows("U", {{"g1", "q g1"}, {"g2", "q^-1 g2"}});
  b.fixed_rows("V", a).rows("V", {{"g1", "q^2 g1"}, {"g2", "g2"}});
  b.fixed_rows("Vp", a).rows("Vp", {{"g1", "g1"}, {"g2", "q^4 g2"}});
  b.fixed_rows("tau_c", a).rows("tau_c", {{"g1", "q^2 g1"}, {"g2", "g2"}});

  b.identity({all_roots_product("a", 0, 3), "q"});
  return b.build();
}

inline Representation representation_q103() {
  using namespace catalog_detail;
  Builder b("Q103");
  b.generator("r0", "m1m2(2,5)m2m1")
      .generator("r1", "m3(3,4)m3")
      .generator("r2", "m6m7(7,8)m7m6")
      .generator("r3", "m9(9,10)m9")
      .generator("s0", "m1m4m8(8,9)m8m4m1")
      .generator("s1", "m2m3m6m7m10(10,5)m10m7m6m3m2")
      .generator("pi1", "(1,3,8,10)(2,4,6,7,9,5)m7m2")
      .generator("pi2", "iota(2,5)(3,10)(4,9)(6,7)")
      .generator("pi3", "(1,8)(2,7)(3,10)(4,9)(5,6)");
  b.root("a0", "y1*y2*y5")
      .root("a1", "y3*y4")
      .root("a2", "y6*y7*y8")
      .root("a3", "y9*y10")
      .root("b0", "y1*y4*y8*y9")
      .root("b1", "y2*y3*y5*y6*y7*y10")
      .root("g", "y2*y4*y6/(y5*y7*y9)")
      .root("q", all_y(10));
  b.family("r", "a", affine_a(3)).family("s", "b", affine_a(1)).invariant("g").reflection_rows();

  for (int i = 0; i <= 3; ++i) b.translation("T" + std::to_string(i), affine_translation(i, 4));
  b.translation("U0", "s0 s1").translation("U1", "s1 s0").translation("V", "pi1 r3 r2 r1 s1");

  b.rows("pi1", {{"a0", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a0"}, {"b0", "b1"}, {"b1", "b0"},
                 {"g", "g"}, {"q", "q"}});
  b.rows("pi2", {{"a0", "a0^-1"}, {"a1", "a3^-1"}, {"a2", "a2^-1"}, {"a3", "a1^-1"}, {"b0", "b0^-1"},
                 {"b1", "b1^-1"}, {"g", "g"}, {"q", "q^-1"}});
  b.rows("pi3", {{"a0", "a2"}, {"a1", "a3"}, {"a2", "a0"}, {"a3", "a1"}, {"b0", "b0"}, {"b1", "b1"},
                 {"g", "g^-1"}, {"q", "q"}});

  const auto a = names("a", 0, 3), bs = names("b", 0, 1);
  b.t_rows(4, join(bs, {"g"}));
  b.u_rows("U", "b", join(a, {"g"}));
  // g is fixed by pi1 and by every reflection, hence by V
  b.shift_rows("V", "a", 4).shift_rows("V", "b", 2).row("V", "g", "g");

  b.identity({all_roots_product("a", 0, 3), "b0 b1", "q"});
  return b.build();
}

inline Representation representation_q104() {
  using namespace catalog_detail;
  Builder b("Q104");
  for (int i = 0; i <= 4; ++i) b.generator("r" + std::to_string(i), simple_flip(2 * i + 1, 2 * i + 2));
  b.generator("s0", "m1m4m5m8(8,9)m8m5m4m1")
      .generator("s1", "m2m3m7m10(10,6)m10m7m3m2")
      .generator("pi1", "(1,4,5,8,9)(2,3,6,7,10)")
      .generator("pi2", "(1,2)(3,4)(5,6)(7,8)(9,10)")
      .generator("pi3", "iota(3,10)(4,9)(5,8)(6,7)");
  for (int i = 0; i <= 4; ++i)
    b.root("a" + std::to_string(i), "y" + std::to_string(2 * i + 1) + "*y" + std::to_string(2 * i + 2));
  b.root("b0", "y1*y4*y5*y8*y9").root("b1", "y2*y3*y6*y7*y10").root("q", all_y(10));
  b.family("r", "a", affine_a(4)).family("s", "b", affine_a(1));

  // Same pattern as on Q11. The reversed product r_{i+1} ... r_{i+1} r_i is
  // the inverse translation: it shifts a_i by q^-2.
  for (int i = 0; i <= 4; ++i) b.translation("T" + std::to_string(i), affine_translation(i, 5));
  b.translation("U0", "s0 s1")
      .translation("U1", "s1 s0")
      .translation("V", "pi1 r4 r3 r2 r1")
      .translation("Vp", "pi2 s1")
      .translation("tau_c", "pi2 s0");

  const auto a = names("a", 0, 4), bs = names("b", 0, 1);
  b.t_rows(5, bs);
  b.u_rows("U", "b", a);
  b.shift_rows("V", "a", 5).fixed_rows("V", bs);
  b.fixed_rows("Vp", a).shift_rows("Vp", "b", 2);

  b.identity({all_roots_product("a", 0, 4), "b0 b1", "q"});
  b.decomposition("Vp U1", "tau_c");
  return b.build();
}

inline Representation representation_q105() {
  using namespace catalog_detail;
  Builder b("Q105");
  for (int i = 1; i <= 5; ++i) b.generator("r" + std::to_string(i), simple_flip(2 * i - 1, 2 * i));
  b.generator("pi1", "(1,2)(3,4)(5,6)(7,8)(9,10)")
      .generator("pi2", "iota(3,4)(7,8)")
      .generator("pi3", "iota(1,10)(2,9)(3,8)(4,7)(5,6)");
  for (int i = 1; i <= 5; ++i)
    b.root("a" + std::to_string(i), "y" + std::to_string(2 * i - 1) + "*y" + std::to_string(2 * i));
  b.root("g", "y1*y5*y9/(y2*y6*y10)");
  b.family("r", "a", finite_a(5)).invariant("g");
  for (int i = 1; i <= 5; ++i) b.row("r" + std::to_string(i), "g", "g");

  std::vector<std::pair<std::string, std::string>> p1, p2, p3;
  for (int i = 1; i <= 5; ++i) {
    std::string ai = "a" + std::to_string(i);
    p1.push_back({ai, ai});
    p2.push_back({ai, ai + "^-1"});
    p3.push_back({ai, "a" + std::to_string(6 - i) + "^-1"});
  }
  p1.push_back({"g", "g^-1"});
  p2.push_back({"g", "g^-1"});
  p3.push_back({"g", "g"});
  b.rows("pi1", p1).rows("pi2", p2).rows("pi3", p3);
  return b.build();
}

// Builds the representation afresh; use catalog() for the shared instance.
inline Representation make_representation(std::string_view name) {
  if (name == "Q12") return representation_q12();
  if (name == "Q11") return representation_q11();
  if (name == "Q101") return representation_q101();
  if (name == "Q102") return representation_q102();
  if (name == "Q103") return representation_q103();
  if (name == "Q104") return representation_q104();
  if (name == "Q105") return representation_q105();
  throw UnknownName(std::string(name));
}

inline const Representation& catalog(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<Representation>, std::less<>> built;
  std::lock_guard<std::mutex> lock(mu);
  auto it = built.find(name);
  if (it == built.end())
    it = built.emplace(std::string(name), std::make_unique<Representation>(make_representation(name))).first;
  return *it->second;
}

}  // namespace qgarnier

#pragma once

#include <string>
#include <vector>

#include "../quiver/catalog.hpp"
#include "roots.hpp"

namespace qgarnier {

// "source element of the source representation reduces to target element of
// the target" under the confluence that produces the target quiver.
struct ReductionClaim {
  enum class Kind { Generator, Root, Translation };

  std::string id;
  Kind kind = Kind::Generator;
  std::string source_rep;
  std::string source;
  std::string target_rep;
  std::string target;  // empty when the limit is expected to diverge
  bool expect_divergent = false;

  // lcm of the exponent denominators of a root claim
  long power() const {
    if (kind != Kind::Root) return 1;
    BigInt l = lcm(parse_root_expr(source).clearing_power(), parse_root_expr(target).clearing_power());
    return l.get_si();
  }

  ConfluenceSpec confluence() const { return confluence_origin(target_rep); }
};

inline const char* to_string(ReductionClaim::Kind k) {
  switch (k) {
    case ReductionClaim::Kind::Generator: return "generator";
    case ReductionClaim::Kind::Root: return "root";
    case ReductionClaim::Kind::Translation: return "translation";
  }
  return "?";
}

namespace claims_detail {

struct Table {
  std::string source_rep;
  std::string target_rep;
  std::vector<ReductionClaim> out;

  void add(ReductionClaim::Kind kind, const std::string& src, const std::string& dst) {
    std::string prefix = kind == ReductionClaim::Kind::Root ? "root" : (kind == ReductionClaim::Kind::Generator ? "gen" : "trans");
    out.push_back({source_rep + "->" + target_rep + ":" + prefix + ":" + dst, kind, source_rep, src, target_rep, dst, false});
  }
  void gen(const std::string& s, const std::string& t) { add(ReductionClaim::Kind::Generator, s, t); }
  void root(const std::string& s, const std::string& t) { add(ReductionClaim::Kind::Root, s, t); }
  void trans(const std::string& s, const std::string& t) { add(ReductionClaim::Kind::Translation, s, t); }
  void same_gen(std::initializer_list<const char*> names) {
    for (auto n : names) gen(n, n);
  }
  void same_root(std::initializer_list<const char*> names) {
    for (auto n : names) root(n, n);
  }
  void same_trans(std::initializer_list<const char*> names) {
    for (auto n : names) trans(n, n);
  }
};

}  // namespace claims_detail

inline std::vector<ReductionClaim> reductions_q12_q11() {
  claims_detail::Table t{"Q12", "Q11", {}};
  t.gen("r0 r5 r0", "r0");
  t.same_gen({"r1", "r2", "r3", "r4", "s0", "s1"});
  t.gen("pi2 sp0", "pi1^5");
  t.gen("pi3", "pi2");
  t.root("a0 a5", "a0");
  t.same_root({"a1", "a2", "a3", "a4", "b0", "b1"});
  t.root("a1^-1 a2^-2 a3^-3 a4^-4 a5^-5 bp1^5", "g");
  t.trans("T5 T0", "T0");
  t.same_trans({"T1", "T2", "T3", "T4", "U0", "U1", "V"});
  t.trans("Vp^-1 V", "Vp");
  t.trans("tau_c", "tau_c");
  return t.out;
}

inline std::vector<ReductionClaim> reductions_q11_q101() {
  claims_detail::Table t{"Q11", "Q101", {}};
  t.gen("r0", "r0");
  t.gen("r1 r2 r1", "r1");
  t.gen("r3", "r2");
  t.gen("r4", "r3");
  t.same_gen({"s0", "s1"});
  t.gen("r2 pi1", "pi1");
  t.gen("r1 r0 pi1^3", "pi2");
  t.gen("r2 r3 pi2", "pi3");
  t.root("a0", "a0");
  t.root("a1 a2", "a1");
  t.root("a3", "a2");
  t.root("a4", "a3");
  t.same_root({"b0", "b1"});
  t.root("a1^(-3/5) a2^(9/5) a3^(6/5) a4^(3/5) g^(2/5)", "g");
  t.trans("T0", "T0");
  t.trans("T1 T2", "T1");
  t.trans("T3", "T2");
  t.trans("T4", "T3");
  t.same_trans({"U0", "U1", "V", "Vp", "tau_c"});
  return t.out;
}

inline std::vector<ReductionClaim> reductions_q11_q102() {
  claims_detail::Table t{"Q11", "Q102", {}};
  t.gen("r0", "r0");
  t.gen("r1 r2 r1", "r1");
  t.gen("r3", "r2");
  t.gen("r4", "r3");
  t.gen("r2 r3 r4 pi1 pi2", "pi1");
  t.gen("r2 r3 r4 r0 s1 pi1^2 pi2", "pi2");
  t.gen("r2 pi2 pi1", "pi3 pi1 pi3");
  t.root("a0", "a0");
  t.root("a1 a2", "a1");
  t.root("a3", "a2");
  t.root("a4", "a3");
  t.root("a1^(1/5) a2^(-3/5) a3^(-2/5) a4^(-1/5) b1 g^(1/5)", "g1");
  t.root("a1^(-3/5) a2^(9/5) a3^(6/5) a4^(3/5) b0 b1^-1 g^(2/5)", "g2");
  t.trans("T0", "T0");
  t.trans("T1 T2", "T1");
  t.trans("T3", "T2");
  t.trans("T4", "T3");
  t.trans("V U1", "U");
  t.trans("Vp U1", "V");
  t.trans("Vp", "Vp");
  t.trans("tau_c", "tau_c");
  return t.out;
}

inline std::vector<ReductionClaim> reductions_q11_q103() {
  claims_detail::Table t{"Q11", "Q103", {}};
  t.same_gen({"r0", "r1"});
  t.gen("r2 r3 r2", "r2");
  t.gen("r4", "r3");
  t.same_gen({"s0", "s1"});
  t.gen("r3 pi1", "pi1");
  t.gen("pi2", "pi2");
  t.same_root({"a0", "a1"});
  t.root("a2 a3", "a2");
  t.root("a4", "a3");
  t.same_root({"b0", "b1"});
  t.root("a1^(1/5) a2^(2/5) a3^(-2/5) a4^(-1/5) g^(1/5)", "g");
  t.same_trans({"T0", "T1"});
  t.trans("T2 T3", "T2");
  t.trans("T4", "T3");
  t.same_trans({"U0", "U1", "V"});
  t.out.push_back({"Q11->Q103:trans:tau_c-diverges", ReductionClaim::Kind::Translation, "Q11", "tau_c", "Q103", "",
                   true});
  return t.out;
}

inline std::vector<ReductionClaim> reductions_q11_q104() {
  claims_detail::Table t{"Q11", "Q104", {}};
  t.same_gen({"r0", "r1", "r2", "r3", "r4", "s0", "s1"});
  t.gen("pi1^6", "pi1");
  t.gen("pi1^5", "pi2");
  t.gen("pi2", "pi3");
  t.same_root({"a0", "a1", "a2", "a3", "a4", "b0", "b1"});
  t.same_trans({"T0", "T1", "T2", "T3", "T4", "U0", "U1"});
  t.trans("Vp V U1", "V");
  t.trans("Vp", "Vp");
  t.trans("tau_c", "tau_c");
  return t.out;
}

inline std::vector<ReductionClaim> reductions_q11_q105() {
  claims_detail::Table t{"Q11", "Q105", {}};
  t.gen("r1", "r2");
  t.gen("r2", "r3");
  t.gen("r3", "r4");
  return t.out;
}

// Claims whose target is the named representation, or every claim.
inline std::vector<ReductionClaim> reduction_claims(const std::string& target = "") {
  std::vector<ReductionClaim> all;
  for (auto part : {reductions_q12_q11(), reductions_q11_q101(), reductions_q11_q102(), reductions_q11_q103(),
                    reductions_q11_q104(), reductions_q11_q105()})
    for (auto& c : part)
      if (target.empty() || c.target_rep == target) all.push_back(c);
  return all;
}

}  // namespace qgarnier

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "../seed/automorphism.hpp"
#include "../seed/confluence.hpp"
#include "catalog.hpp"
#include "claims.hpp"

namespace qgarnier {

enum class CheckMode { Auto, Exact, Randomized };
enum class CheckStatus { Pass, Fail, Divergent, Error, Note };

inline const char* to_string(CheckMode m) {
  switch (m) {
    case CheckMode::Auto: return "auto";
    case CheckMode::Exact: return "exact";
    case CheckMode::Randomized: return "randomized";
  }
  return "?";
}

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Divergent: return "divergent";
    case CheckStatus::Error: return "error";
    case CheckStatus::Note: return "note";
  }
  return "?";
}

struct VerifyOptions {
  CheckMode mode = CheckMode::Auto;
  int trials = 20;
  std::uint64_t seed = 20240229;
  std::size_t exact_step_limit = 12;  // Auto picks exact mode up to this many steps
};

struct CheckResult {
  std::string id;
  std::string kind;
  std::string mode;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0;
  std::string witness;

  // Notes are informational; every other non-pass status counts as a failure,
  // except a divergence that was expected (reported as pass).
  bool ok() const { return status == CheckStatus::Pass || status == CheckStatus::Note; }
};

inline nlohmann::json to_json(const CheckResult& r, bool with_time = false) {
  nlohmann::json j{{"id", r.id}, {"kind", r.kind}, {"mode", r.mode}, {"status", to_string(r.status)}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (with_time) j["seconds"] = r.seconds;
  return j;
}

inline bool all_ok(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.ok()) return false;
  return true;
}

// 64-bit FNV-1a over the global seed and the claim id, so every claim draws
// its own reproducible stream regardless of evaluation order.
inline std::uint64_t claim_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (int k = 0; k < 8; ++k) mix(static_cast<unsigned char>(seed >> (8 * k)));
  for (char c : id) mix(static_cast<unsigned char>(c));
  return h;
}

namespace verify_detail {

inline std::vector<BigRational> random_values(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(2, 1000000);
  std::vector<BigRational> v;
  for (int k = 0; k < n; ++k) v.emplace_back(dist(rng));
  return v;
}

inline std::string point_text(const std::vector<BigRational>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::string("y") + std::to_string(k + 1) + "=" + to_string(v[k]);
  return s;
}

// Runs body, filling seconds and turning exceptions into Error entries.
inline CheckResult timed(CheckResult r, const std::function<void(CheckResult&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = CheckStatus::Error;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline bool use_exact(const VerifyOptions& o, std::size_t steps) {
  if (o.mode == CheckMode::Exact) return true;
  if (o.mode == CheckMode::Randomized) return false;
  return steps <= o.exact_step_limit;
}

}  // namespace verify_detail

// lhs = rhs as automorphisms; an empty rhs means the identity.
inline CheckResult check_words_equal(const Representation& rep, const std::string& id, const std::string& kind,
                                     const std::string& lhs, const std::string& rhs, const VerifyOptions& opts) {
  using namespace verify_detail;
  return timed({id, kind}, [&](CheckResult& r) {
    Word a = rep.word(lhs), b = rep.word(rhs);
    bool exact = use_exact(opts, a.size() + b.size());
    r.mode = exact ? "exact" : "randomized";
    if (exact) {
      Automorphism fa = compile(a, rep.quiver), fb = compile(b, rep.quiver);
      if (!(fa == fb)) {
        r.status = CheckStatus::Fail;
        for (int k = 1; k <= fa.size(); ++k)
          if (!(fa.image(k) == fb.image(k))) {
            r.detail = "images of y" + std::to_string(k) + " differ";
            break;
          }
      }
      return;
    }
    std::mt19937_64 rng(claim_seed(opts.seed, id));
    int done = 0, draws = 0;
    while (done < opts.trials && draws < opts.trials * 20) {
      ++draws;
      Seed<BigRational> s0{rep.quiver, random_values(rep.quiver.size(), rng)};
      Seed<BigRational> sa, sb;
      try {
        sa = apply_word(s0, a);
        sb = apply_word(s0, b);
      } catch (const DivisionByZero&) {
        continue;
      }
      ++done;
      if (!seeds_equal(sa, sb)) {
        r.status = CheckStatus::Fail;
        r.witness = point_text(s0.coeffs);
        return;
      }
    }
    if (done == 0) throw InconclusiveAllPoles();
    r.detail = std::to_string(done) + " trials";
  });
}

// r_i^2 = 1 (exact), braid relations per Cartan matrix and commutation
// between families (randomized for long words).
inline std::vector<CheckResult> verify_relations(const Representation& rep, const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  const std::string p = rep.name + ":rel:";
  VerifyOptions exact = opts;
  exact.mode = CheckMode::Exact;
  for (const auto& f : rep.families)
    for (int i : f.labels()) {
      std::string g = f.generator(i);
      out.push_back(check_words_equal(rep, p + g + "^2", "relation", g + " " + g, "", exact));
    }
  for (const auto& f : rep.families) {
    auto l = f.labels();
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = x + 1; y < l.size(); ++y) {
        int m = f.cartan.braid_order(l[x], l[y]);
        if (m == 0) continue;  // infinite order, nothing to check
        std::string w = "(" + f.generator(l[x]) + " " + f.generator(l[y]) + ")^" + std::to_string(m);
        out.push_back(check_words_equal(rep, p + w, "relation", w, "", opts));
      }
  }
  for (std::size_t a = 0; a < rep.families.size(); ++a)
    for (std::size_t b = a + 1; b < rep.families.size(); ++b)
      for (int i : rep.families[a].labels())
        for (int j : rep.families[b].labels()) {
          std::string w = "(" + rep.families[a].generator(i) + " " + rep.families[b].generator(j) + ")^2";
          out.push_back(check_words_equal(rep, p + w, "relation", w, "", opts));
        }
  return out;
}

// element(root) = image for every tabulated row, exactly.
inline CheckResult check_action_row(const Representation& rep, const ActionRow& row) {
  std::string id = rep.name + ":table:" + row.element + "(" + row.root + ")";
  return verify_detail::timed({id, "table", "exact"}, [&](CheckResult& r) {
    RationalFunction img = act_on_expr(rep, row.element, rep.root(row.root).to_rational_function());
    auto mono = LaurentMonomial::from(img);
    if (!mono) throw NonMonomialImage(row.element, row.root);
    LaurentMonomial want = rep.root_value(row.image);
    if (!(*mono == want)) {
      r.status = CheckStatus::Fail;
      r.detail = "got " + mono->to_string() + ", expected " + row.image + " = " + want.to_string();
    }
  });
}

inline std::vector<CheckResult> verify_action_table(const Representation& rep) {
  std::vector<CheckResult> out;
  for (const auto& row : rep.table) out.push_back(check_action_row(rep, row));
  return out;
}

inline CheckResult verify_decomposition(const Representation& rep, const std::string& lhs, const std::string& rhs,
                                        const VerifyOptions& opts = {}) {
  return check_words_equal(rep, rep.name + ":decomp:" + lhs + " = " + rhs, "decomposition", lhs, rhs, opts);
}

inline std::vector<CheckResult> verify_decompositions(const Representation& rep, const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  for (const auto& d : rep.decompositions) out.push_back(verify_decomposition(rep, d.lhs, d.rhs, opts));
  return out;
}

// Each group of root expressions names one monomial.
inline std::vector<CheckResult> verify_root_identities(const Representation& rep) {
  std::vector<CheckResult> out;
  for (const auto& group : rep.root_identities) {
    std::string id = rep.name + ":roots:";
    for (std::size_t k = 0; k < group.size(); ++k) id += (k ? " = " : "") + group[k];
    out.push_back(verify_detail::timed({id, "root-identity", "exact"}, [&](CheckResult& r) {
      LaurentMonomial first = rep.root_value(group.front());
      for (const auto& e : group)
        if (!(rep.root_value(e) == first)) {
          r.status = CheckStatus::Fail;
          r.detail = e + " differs from " + group.front();
        }
    }));
  }
  return out;
}

// Result of pushing source data through the confluence for one claim.
inline CheckResult verify_reduction(const ReductionClaim& claim, const VerifyOptions& opts = {}) {
  using namespace verify_detail;
  return timed({claim.id, std::string("reduction-") + to_string(claim.kind)}, [&](CheckResult& r) {
    const Representation& src = catalog(claim.source_rep);
    const ConfluenceSpec conf = claim.confluence();
    const int n = src.quiver.size(), i = conf.i, j = conf.j;
    const ConfluenceLabels labels(n, i, conf.relabel);

    if (claim.kind == ReductionClaim::Kind::Root) {
      const Representation& dst = catalog(claim.target_rep);
      r.mode = "exact";
      long p = claim.power();
      if (p != 1) r.detail = "compared at power " + std::to_string(p);
      RationalFunction f = src.root_value(parse_root_expr(claim.source), p).to_rational_function();
      LimitResult lim = confluence_function(f, n, i, j, conf.relabel);
      if (is_divergent(lim)) {
        r.status = CheckStatus::Divergent;
        return;
      }
      RationalFunction want = dst.root_value(parse_root_expr(claim.target), p).to_rational_function();
      if (!(std::get<RationalFunction>(lim) == want)) {
        r.status = CheckStatus::Fail;
        r.detail = "limit " + std::get<RationalFunction>(lim).to_string() + " vs " + want.to_string();
      }
      return;
    }

    Word ws = src.word(claim.source);
    const Representation* dst = claim.expect_divergent ? nullptr : &catalog(claim.target_rep);
    Word wt = dst ? dst->word(claim.target) : Word{};
    bool exact = use_exact(opts, ws.size() + wt.size());
    r.mode = exact ? "exact" : "randomized";
    auto divergent = [&] {
      r.status = claim.expect_divergent ? CheckStatus::Pass : CheckStatus::Divergent;
      r.detail = "limit diverges";
    };

    if (exact) {
      Automorphism a = automorphism_of(src, claim.source);
      SeedLimit lim = confluence_seed(Seed<RationalFunction>{src.quiver, a.images}, i, j, conf.relabel);
      if (std::holds_alternative<Divergent>(lim)) return divergent();
      if (claim.expect_divergent) {
        r.status = CheckStatus::Fail;
        r.detail = "limit exists but divergence was expected";
        return;
      }
      Automorphism b = automorphism_of(*dst, claim.target);
      const auto& got = std::get<Seed<RationalFunction>>(lim);
      for (int k = 1; k <= b.size(); ++k)
        if (!(got.coeffs[k - 1] == b.image(k))) {
          r.status = CheckStatus::Fail;
          r.detail = "image of y" + std::to_string(k) + " differs";
          return;
        }
      return;
    }

    // y_i = c_j / eps, y_j = eps, other y_v = c_v; the target seed starts at
    // y_{label(v)} = c_v.
    std::mt19937_64 rng(claim_seed(opts.seed, claim.id));
    int done = 0, draws = 0;
    while (done < opts.trials && draws < opts.trials * 20) {
      ++draws;
      std::vector<BigRational> c = random_values(n, rng);
      Seed<RationalFunction> s{src.quiver, {}};
      for (int v = 1; v <= n; ++v) {
        if (v == i)
          s.coeffs.push_back(RationalFunction::monomial(Monomial::of(var::eps, -1), c[j - 1]));
        else if (v == j)
          s.coeffs.push_back(RationalFunction::variable(var::eps));
        else
          s.coeffs.push_back(RationalFunction::monomial(Monomial(), c[v - 1]));
      }
      std::variant<std::vector<RationalFunction>, Divergent> lim;
      try {
        s = apply_word(s, ws);
        lim = confluence_limit(s.coeffs, i, j, labels);
      } catch (const DivisionByZero&) {
        continue;
      }
      if (std::holds_alternative<Divergent>(lim)) {
        ++done;
        if (claim.expect_divergent) continue;
        r.witness = point_text(c);
        return divergent();
      }
      if (claim.expect_divergent) {
        r.status = CheckStatus::Fail;
        r.detail = "limit exists but divergence was expected";
        r.witness = point_text(c);
        return;
      }
      Seed<BigRational> t{dst->quiver, std::vector<BigRational>(n - 1)};
      for (int v : surviving_vertices(n, i)) t.coeffs[labels(v) - 1] = c[v - 1];
      try {
        t = apply_word(t, wt);
      } catch (const DivisionByZero&) {
        continue;
      }
      ++done;
      const auto& got = std::get<std::vector<RationalFunction>>(lim);
      for (int k = 0; k < n - 1; ++k)
        if (!(got[k] == RationalFunction::monomial(Monomial(), t.coeffs[k]))) {
          r.status = CheckStatus::Fail;
          r.detail = "coefficient y" + std::to_string(k + 1) + " differs";
          r.witness = point_text(c);
          return;
        }
    }
    if (done == 0) throw InconclusiveAllPoles();
    if (claim.expect_divergent) return divergent();
    r.detail = std::to_string(done) + " trials";
  });
}

inline std::vector<CheckResult> verify_reductions(const std::string& target = "", const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  for (const auto& c : reduction_claims(target)) out.push_back(verify_reduction(c, opts));
  return out;
}

}  // namespace qgarnier

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "qhg.hpp"
#include "quiver.hpp"
#include "seed.hpp"
#include "suite.hpp"
#include "weylrep.hpp"

namespace qgarnier {

class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct Config {
  double tolerance = 1e-8;
  int trials = 20;
  std::uint64_t seed = 20240229;
  unsigned precision_bits = 256;
  std::string output = "text";

  void validate() const {
    if (!(tolerance > 0)) throw UsageError("tolerance must be positive");
    if (trials < 1) throw UsageError("randomized-trials must be at least 1");
    if (precision_bits < 32) throw UsageError("precision-bits must be at least 32");
    if (output != "text" && output != "json") throw UsageError("output must be text or json");
  }
};

namespace cli_detail {

inline std::string trim(std::string s) {
  auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) s = s.substr(1, s.size() - 2);
  return s;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T v{};
  in >> v;
  if (!in || !(in >> std::ws).eof()) throw UsageError("bad value for " + key + ": '" + text + "'");
  return v;
}

inline void set_key(Config& c, std::string key, const std::string& value) {
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "tolerance")
    c.tolerance = parse_number<double>(key, value);
  else if (key == "randomized-trials" || key == "trials")
    c.trials = parse_number<int>(key, value);
  else if (key == "rng-seed" || key == "seed")
    c.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "precision-bits")
    c.precision_bits = parse_number<unsigned>(key, value);
  else if (key == "output")
    c.output = value;
  else
    throw UsageError("unknown config key '" + key + "'");
}

}  // namespace cli_detail

// key = value lines; '#' starts a comment and [section] headers are ignored.
inline void read_config(Config& c, std::istream& in) {
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = cli_detail::trim(line);
    if (line.empty() || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(n) + " has no '='");
    cli_detail::set_key(c, cli_detail::trim(line.substr(0, eq)), cli_detail::trim(line.substr(eq + 1)));
  }
}

inline void read_config_file(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config " + path);
  read_config(c, in);
}

namespace cli_detail {

struct Context {
  Config config;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return config.output == "json"; }

  VerifyOptions verify(CheckMode mode = CheckMode::Auto) const {
    VerifyOptions o;
    o.mode = mode;
    o.trials = config.trials;
    o.seed = config.seed;
    return o;
  }
};

inline bool is_catalog_name(const std::string& s) {
  const auto& n = catalog_names();
  return std::find(n.begin(), n.end(), s) != n.end();
}

// A catalog name or a path to a quiver in JSON form.
inline Quiver load_quiver(const std::string& name) {
  if (is_catalog_name(name)) return catalog_quiver(name);
  std::ifstream in(name);
  if (!in) throw UsageError("'" + name + "' is neither a catalog quiver nor a readable file");
  try {
    return quiver_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(name + ": " + e.what());
  }
}

inline std::string coefficient_lines(const std::vector<RationalFunction>& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += "y" + std::to_string(k + 1) + " -> " + c[k].to_string() + "\n";
  return s;
}

inline nlohmann::json coefficient_json(const std::vector<RationalFunction>& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& f : c) j.push_back(f.to_string());
  return j;
}

inline int report(Context& cx, const std::vector<CheckResult>& rs) {
  bool ok = all_ok(rs);
  if (cx.json()) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : rs) checks.push_back(to_json(r));
    cx.out << nlohmann::json{{"ok", ok}, {"checks", checks}}.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  int pass = 0;
  for (const auto& r : rs) {
    if (r.ok()) ++pass;
    cx.out << to_string(r.status) << "  " << r.id;
    if (!r.detail.empty()) cx.out << "  (" << r.detail << ")";
    cx.out << "\n";
  }
  cx.out << pass << "/" << rs.size() << " ok\n";
  if (!ok) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : rs)
      if (!r.ok()) failures.push_back(to_json(r));
    cx.out << nlohmann::json{{"failures", failures}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

inline int failure(Context& cx, const std::string& kind, const std::string& what) {
  cx.out << nlohmann::json{{"ok", false}, {"error", kind}, {"detail", what}}.dump(2) << "\n";
  return 1;
}

// --- quiver

inline int cmd_quiver(Context& cx, const std::string& action, const std::string& name) {
  Quiver q = load_quiver(name);
  if (action == "export-json") {
    cx.out << quiver_to_json(q).dump() << "\n";
  } else if (action == "export-dot") {
    cx.out << quiver_to_dot(q, is_catalog_name(name) ? name : "Q");
  } else if (cx.json()) {
    cx.out << nlohmann::json{{"name", name}, {"quiver", quiver_to_json(q)}, {"matrix", q.matrix()}}.dump(2) << "\n";
  } else {
    cx.out << name << ": " << q.size() << " vertices, " << q.arrows().size() << " arrow classes\n";
    for (const auto& row : q.matrix()) {
      for (int v : row) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%3d", v);
        cx.out << buf;
      }
      cx.out << "\n";
    }
  }
  return 0;
}

// --- mutate

inline Word resolve_word(const std::string& name, const std::string& text) {
  if (is_catalog_name(name)) return catalog(name).word(text);
  return parse_word(text);
}

inline int cmd_mutate(Context& cx, const std::string& name, const std::string& text) {
  Quiver q = is_catalog_name(name) ? catalog(name).quiver : load_quiver(name);
  Word w = resolve_word(name, text);
  Seed<RationalFunction> s = apply_word(initial_seed<RationalFunction>(q), w);
  if (cx.json()) {
    cx.out << nlohmann::json{{"word", w.steps_text()},
                             {"quiver", quiver_to_json(s.quiver)},
                             {"coefficients", coefficient_json(s.coeffs)},
                             {"quiver_restored", s.quiver == q}}
                  .dump(2)
           << "\n";
  } else {
    cx.out << "# " << w.steps_text() << "\n";
    if (s.quiver != q) cx.out << "# quiver changed: " << quiver_to_json(s.quiver).dump() << "\n";
    cx.out << coefficient_lines(s.coeffs);
  }
  return 0;
}

// --- verify

inline std::vector<std::string> verify_targets(const std::string& name) {
  if (name == "all") return catalog_names();
  if (!is_catalog_name(name)) throw UnknownName(name);
  return {name};
}

inline std::vector<CheckResult> verify_one(const std::string& what, const std::string& name, const VerifyOptions& o) {
  const Representation& rep = catalog(name);
  std::vector<CheckResult> out;
  auto add = [&](const std::vector<CheckResult>& v) { out.insert(out.end(), v.begin(), v.end()); };
  if (what == "relations") {
    add(verify_relations(rep, o));
  } else if (what == "tables") {
    add(verify_action_table(rep));
    add(verify_root_identities(rep));
  } else if (what == "decompositions") {
    add(verify_decompositions(rep, o));
  } else if (what == "reductions") {
    for (const auto& c : reduction_claims())
      if (c.source_rep == name || c.target_rep == name) out.push_back(verify_reduction(c, o));
  } else if (what == "goldens") {
    add(verify_goldens(name));
  } else {
    throw UsageError("unknown verify target '" + what + "'");
  }
  return out;
}

inline int cmd_verify(Context& cx, const std::string& what, const std::string& name, CheckMode mode) {
  std::vector<CheckResult> out;
  std::vector<std::string> seen;
  for (const auto& n : verify_targets(name)) {
    if (what == "reductions") {
      // each claim once when running over several representations
      for (auto& r : verify_one(what, n, cx.verify(mode)))
        if (std::find(seen.begin(), seen.end(), r.id) == seen.end()) {
          seen.push_back(r.id);
          out.push_back(std::move(r));
        }
    } else {
      auto v = verify_one(what, n, cx.verify(mode));
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return report(cx, out);
}

// --- confluence

// The relabeling the catalog uses for this confluence, else the default rule.
inline VertexMap confluence_relabel(const std::string& name, int i, int j) {
  for (const auto& t : catalog_names()) {
    if (t == "Q12") continue;
    ConfluenceSpec c = confluence_origin(t);
    if (c.source == name && c.i == i && c.j == j) return c.relabel;
  }
  return default_confluence_relabel(catalog_quiver(name).size(), i);
}

inline int cmd_confluence(Context& cx, const std::string& name, int i, int j, const std::string& word) {
  Quiver q = is_catalog_name(name) ? catalog(name).quiver : load_quiver(name);
  Seed<RationalFunction> s = initial_seed<RationalFunction>(q);
  if (!word.empty()) s = apply_word(s, resolve_word(name, word));
  VertexMap relabel = is_catalog_name(name) ? confluence_relabel(name, i, j) : default_confluence_relabel(q.size(), i);
  SeedLimit lim = confluence_seed(s, i, j, relabel);
  if (auto* d = std::get_if<Divergent>(&lim)) {
    if (cx.json())
      cx.out << nlohmann::json{{"result", "divergent"}, {"valuation", d->valuation}}.dump(2) << "\n";
    else
      cx.out << "Divergent: a coefficient has eps-valuation " << d->valuation << "\n";
    return 0;
  }
  const auto& r = std::get<Seed<RationalFunction>>(lim);
  if (cx.json()) {
    cx.out << nlohmann::json{{"result", "convergent"},
                             {"quiver", quiver_to_json(r.quiver)},
                             {"coefficients", coefficient_json(r.coeffs)}}
                  .dump(2)
           << "\n";
  } else {
    cx.out << "# quiver " << quiver_to_json(r.quiver).dump() << "\n" << coefficient_lines(r.coeffs);
  }
  return 0;
}

// --- dynamics

inline int cmd_derive_riccati(Context& cx, const std::string& name) {
  if (!has_riccati_chart(name)) throw UsageError(name + " has no Riccati chart");
  const BirationalMap& m = riccati_map(name);
  if (cx.json()) {
    nlohmann::json images = nlohmann::json::object(), constraints = nlohmann::json::object();
    for (const auto& [k, f] : m.images) images["y" + std::to_string(k)] = f.to_string();
    for (const auto& [k, f] : m.chart.constraints) constraints["y" + std::to_string(k)] = f.to_string();
    cx.out << nlohmann::json{{"rep", name}, {"chart", constraints}, {"tau_c", images}}.dump(2) << "\n";
  } else {
    cx.out << m.to_string();
  }
  return 0;
}

inline std::complex<double> parse_complex(const std::string& key, const std::string& text) {
  return parse_number<std::complex<double>>(key, text);
}

// Without --start the orbit begins at the hypergeometric solution for the
// standard parameters at t = 0.05.
inline OrbitStart orbit_start(const std::string& name, const std::vector<std::string>& start,
                              const std::vector<std::string>& alpha) {
  RiccatiChart chart = riccati_chart(name);
  OrbitStart s;
  HgCase c = parse_case(name);
  auto p = standard_parameters(c);
  if (alpha.empty()) {
    for (double a : p.alpha) s.alpha.emplace_back(a);
  } else {
    for (const auto& a : alpha) s.alpha.push_back(parse_complex("alpha", a));
  }
  if (start.empty()) {
    if (!alpha.empty()) throw UsageError("--alpha needs --start");
    double t = 0.05;
    auto y = riccati_values(c, p, solution(c, p, t), t);
    for (int k : chart.free) s.free[k] = y.at(k);
    return s;
  }
  for (const auto& item : start) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--start expects yK=value, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (!key.empty() && key.front() == 'y') key.erase(0, 1);
    int k = parse_number<int>("vertex", key);
    if (!chart.is_free(k)) throw UsageError("y" + key + " is fixed by the chart of " + name);
    s.free[k] = parse_complex(item, trim(item.substr(eq + 1)));
  }
  return s;
}

inline std::string csv_number(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline int cmd_orbit(Context& cx, const std::string& name, const std::vector<std::string>& start,
                     const std::vector<std::string>& alpha, int steps) {
  if (!has_riccati_chart(name)) throw UsageError(name + " has no Riccati chart");
  if (steps < 0) throw UsageError("--steps must be nonnegative");
  OrbitStart s = orbit_start(name, start, alpha);
  Orbit o;
  try {
    o = iterate_numeric(riccati_map(name), s, steps, 1e-6);
  } catch (const PoleAtPoint& e) {
    return failure(cx, "pole", e.what());
  } catch (const ParameterDrift& e) {
    return failure(cx, "parameter-drift", e.what());
  }
  cx.out << "step";
  for (int k : o.free) cx.out << ",y" << k << ".re,y" << k << ".im";
  cx.out << "\n";
  for (std::size_t n = 0; n < o.points.size(); ++n) {
    cx.out << n;
    for (const auto& v : o.points[n]) cx.out << "," << csv_number(v.real()) << "," << csv_number(v.imag());
    cx.out << "\n";
  }
  return 0;
}

// --- qhg

inline int cmd_check_hypergeometric(Context& cx, const std::string& name, std::optional<double> q,
                                    std::optional<double> t, const std::vector<double>& alpha,
                                    std::optional<double> tol) {
  HgCase c = parse_case(name);
  double qq = q.value_or(0.4);
  HgParameters<double> p;
  if (alpha.empty()) {
    p = q ? make_parameters<double>(c, qq, {0.3, 0.7, 0.5, 0.6, 0.8}) : standard_parameters(c);
  } else if (static_cast<int>(alpha.size()) == parameter_count(c) - 1) {
    p = make_parameters<double>(c, qq, alpha);
  } else if (static_cast<int>(alpha.size()) == parameter_count(c)) {
    p = {alpha, q ? qq : hg_detail::product(alpha)};
    hg_detail::check(c, p);
  } else {
    throw UsageError(name + " takes " + std::to_string(parameter_count(c) - 1) + " or " +
                     std::to_string(parameter_count(c)) + " alpha values");
  }
  hg_detail::check(c, p);
  double tt = t.value_or(0.05), limit = tol.value_or(cx.config.tolerance);
  double lin = verify_linear(c, p, tt);
  RiccatiSolutionReport r = verify_riccati_solution(c, p, tt);
  bool ok = lin < limit && r.residual < limit && r.chart_residual < limit;
  nlohmann::json j{{"case", name},
                   {"q", p.q},
                   {"t", tt},
                   {"alpha", p.alpha},
                   {"tolerance", limit},
                   {"linear_residual", lin},
                   {"riccati_residual", r.residual},
                   {"chart_residual", r.chart_residual},
                   {"ungauged_riccati_residual", r.printed_residual}};
  if (c == HgCase::Q102) {
    j["gamma1_residual"] = r.gamma_residual;
    ok = ok && r.gamma_residual < limit;
  }
  j["ok"] = ok;
  cx.out << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

inline int cmd_check_degeneration(Context& cx, const std::string& src, const std::string& dst,
                                  std::vector<double> eps, double t, double window) {
  Degeneration d = degeneration(parse_case(src), parse_case(dst));
  if (eps.empty()) eps = {1e-2, 1e-3, 1e-4, 1e-5};
  SymbolicLimitReport sym = symbolic_degeneration(d);
  NumericDegenerationReport num = numeric_degeneration(d, eps, cx.config.precision_bits, t);
  bool ok = sym.ok && std::abs(num.slope - 1.0) <= window;
  if (cx.json()) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& p : num.table) table.push_back({{"eps", p.eps}, {"error", p.error}});
    nlohmann::json j{{"source", src}, {"target", dst}, {"symbolic_limit", sym.ok}, {"table", table},
                     {"slope", num.slope}, {"precision_bits", cx.config.precision_bits}, {"ok", ok}};
    if (!sym.ok) j["detail"] = sym.detail;
    cx.out << j.dump(2) << "\n";
  } else {
    cx.out << "symbolic limit: " << (sym.ok ? "ok" : sym.detail) << "\n";
    cx.out << "eps,error\n";
    for (const auto& p : num.table) cx.out << csv_number(p.eps) << "," << csv_number(p.error) << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", num.slope);
    cx.out << "slope " << buf << "\n";
    if (!ok) cx.out << nlohmann::json{{"ok", false}, {"symbolic_limit", sym.ok}, {"slope", num.slope}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

// --- suite

inline SuiteOptions suite_options(const Config& c) {
  SuiteOptions o;
  o.verify.trials = c.trials;
  o.verify.seed = c.seed;
  o.precision_bits = c.precision_bits;
  return o;
}

inline int cmd_suite(Context& cx) {
  auto results = run_suite(suite_options(cx.config));
  bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& c) { return c.ok(); });
  if (cx.json()) {
    cx.out << nlohmann::json{{"ok", ok}, {"criteria", to_json(results)}}.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  for (const auto& c : results)
    cx.out << (c.ok() ? "PASS" : "FAIL") << "  " << c.number << "  " << c.title << "  (" << c.checks.size()
           << " checks)\n";
  if (!ok) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& c : results)
      for (const auto& r : c.checks)
        if (!r.ok()) failures.push_back(to_json(r));
    cx.out << nlohmann::json{{"failures", failures}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

inline CheckMode parse_mode(const std::string& s) {
  if (s == "auto") return CheckMode::Auto;
  if (s == "exact") return CheckMode::Exact;
  if (s == "randomized") return CheckMode::Randomized;
  throw UsageError("mode must be auto, exact or randomized");
}

}  // namespace cli_detail

// Runs one command line (without the program name). Exit codes: 0 when every
// requested check passes, 1 on a check failure, 2 on a usage error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"q-Garnier cluster toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expanded help");

  std::string config_path, output;
  std::optional<double> tolerance;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> bits;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--tolerance", tolerance, "numeric tolerance");
  app.add_option("--trials", trials, "randomized trials per claim");
  app.add_option("--seed", seed, "rng seed");
  app.add_option("--precision-bits", bits, "bits for high-precision arithmetic");

  std::string a1, a2, a3, word, mode = "auto";
  int i = 0, j = 0, steps = 20;
  std::vector<std::string> start, alpha_text;
  std::vector<double> alpha, eps;
  std::optional<double> q, t, tol;
  double deg_t = 0.05, window = 0.15;

  auto* quiver = app.add_subcommand("quiver", "show or export a catalog quiver");
  quiver->add_option("action", a1)->required()->check(CLI::IsMember({"show", "export-dot", "export-json"}));
  quiver->add_option("name", a2, "catalog name or JSON file")->required();

  auto* mutate = app.add_subcommand("mutate", "apply a word to the initial seed");
  mutate->add_option("name", a1)->required();
  mutate->add_option("--word", word, "e.g. \"m1 (1,2) m1\" or \"r0 r5 r0\"")->required();

  auto* verify = app.add_subcommand("verify", "check catalog claims");
  verify->add_option("what", a1)->required()->check(
      CLI::IsMember({"relations", "tables", "reductions", "decompositions", "goldens"}));
  verify->add_option("name", a2, "representation or all")->required();
  verify->add_option("--mode", mode, "auto, exact or randomized");

  auto* confluence = app.add_subcommand("confluence", "confluence i -> j of a seed");
  confluence->add_option("name", a1)->required();
  confluence->add_option("i", i)->required();
  confluence->add_option("j", j)->required();
  confluence->add_option("--word", word, "apply this word to the initial seed first");

  auto* derive = app.add_subcommand("derive-riccati", "tau_c on the Riccati chart");
  derive->add_option("rep", a1)->required();

  auto* orbit = app.add_subcommand("orbit", "iterate tau_c numerically, CSV output");
  orbit->add_option("rep", a1)->required();
  orbit->add_option("--start", start, "yK=value for each free coefficient");
  orbit->add_option("--alpha", alpha_text, "parameter values a0 a1 ...");
  orbit->add_option("--steps", steps, "number of steps");

  auto* hyper = app.add_subcommand("check-hypergeometric", "residuals of the hypergeometric solution");
  hyper->add_option("case", a1)->required();
  hyper->add_option("--q", q);
  hyper->add_option("--t", t);
  hyper->add_option("--alpha", alpha);
  hyper->add_option("--tol", tol);

  auto* degen = app.add_subcommand("check-degeneration", "eps-table and slope of a degeneration");
  degen->add_option("source", a1)->required();
  degen->add_option("target", a2)->required();
  degen->add_option("--eps", eps);
  degen->add_option("--t", deg_t);
  degen->add_option("--window", window, "allowed distance of the slope from 1");

  auto* suite = app.add_subcommand("suite", "run every acceptance criterion");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    Config config;
    if (!config_path.empty()) read_config_file(config, config_path);
    if (const char* env = std::getenv("QG_SEED")) config.seed = parse_number<std::uint64_t>("QG_SEED", env);
    if (!output.empty()) config.output = output;
    if (tolerance) config.tolerance = *tolerance;
    if (trials) config.trials = *trials;
    if (seed) config.seed = *seed;
    if (bits) config.precision_bits = *bits;
    config.validate();
    Context cx{config, out, err};

    if (quiver->parsed()) return cmd_quiver(cx, a1, a2);
    if (mutate->parsed()) return cmd_mutate(cx, a1, word);
    if (verify->parsed()) return cmd_verify(cx, a1, a2, parse_mode(mode));
    if (confluence->parsed()) return cmd_confluence(cx, a1, i, j, word);
    if (derive->parsed()) return cmd_derive_riccati(cx, a1);
    if (orbit->parsed()) return cmd_orbit(cx, a1, start, alpha_text, steps);
    if (hyper->parsed()) return cmd_check_hypergeometric(cx, a1, q, t, alpha, tol);
    if (degen->parsed()) return cmd_check_degeneration(cx, a1, a2, eps, deg_t, window);
    if (suite->parsed()) return cmd_suite(cx);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    out << nlohmann::json{{"ok", false}, {"error", "exception"}, {"detail", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 2;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run_cli(std::move(args), out, err);
}

}  // namespace qgarnier

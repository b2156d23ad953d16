#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qgarnier/cli.hpp"

using namespace qgarnier;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"quiver", "show"}).code, 2);
  EXPECT_EQ(run({"quiver", "show", "Q99"}).code, 2);
  EXPECT_EQ(run({"verify", "relations", "Q99"}).code, 2);
  EXPECT_EQ(run({"derive-riccati", "Q105"}).code, 2);
  EXPECT_EQ(run({"check-hypergeometric", "Q101", "--alpha", "0.1"}).code, 2);
  EXPECT_EQ(run({"--trials", "0", "quiver", "show", "Q12"}).code, 2);
  EXPECT_EQ(run({"mutate", "Q12", "--word", "m1 (1,"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, QuiverExport) {
  CliRun r = run({"quiver", "export-json", "Q101"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(quiver_from_json(j), catalog_quiver("Q101"));

  CliRun dot = run({"quiver", "export-dot", "Q12"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph Q12 {", 0), 0u);

  std::string path = temp_file("qg_cli_quiver.json", r.out);
  CliRun again = run({"quiver", "export-json", path});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, Mutate) {
  CliRun r = run({"mutate", "Q12", "--word", "m1 (1,2) m1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("y1 -> (1)/(y2)"), std::string::npos);
  CliRun named = run({"--output", "json", "mutate", "Q12", "--word", "r0"});
  ASSERT_EQ(named.code, 0);
  auto j = nlohmann::json::parse(named.out);
  EXPECT_EQ(j["word"], "m1 (1,2) m1");
  EXPECT_TRUE(j["quiver_restored"].get<bool>());
}

TEST(Cli, VerifyRelations) {
  CliRun r = run({"--output", "json", "verify", "relations", "Q12"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  bool square = false, braid = false, commute = false;
  for (const auto& c : j["checks"]) {
    std::string id = c["id"];
    square |= id == "Q12:rel:r0^2";
    braid |= id.find("(r0 r1)^3") != std::string::npos;
    commute |= id.find("(r0 s0)^2") != std::string::npos;
  }
  EXPECT_TRUE(square && braid && commute) << r.out;
}

TEST(Cli, VerifyIsDeterministic) {
  std::vector<std::string> args{"--output", "json", "verify", "decompositions", "Q11", "--mode", "randomized"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ConfluenceDivergence) {
  CliRun r = run({"--output", "json", "confluence", "Q11", "5", "8", "--word", "tau_c"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"], "divergent");
  CliRun ok = run({"--output", "json", "confluence", "Q12", "12", "1", "--word", "r0 r5 r0"});
  ASSERT_EQ(ok.code, 0);
  auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j["result"], "convergent");
  EXPECT_EQ(quiver_from_json(j["quiver"]), catalog_quiver("Q11"));
}

TEST(Cli, DeriveRiccatiAndOrbit) {
  CliRun r = run({"derive-riccati", "Q12"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, riccati_map("Q12").to_string());

  CliRun o = run({"orbit", "Q11", "--steps", "4"});
  ASSERT_EQ(o.code, 0) << o.out << o.err;
  std::istringstream lines(o.out);
  std::string header, line;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("step,y1.re,y1.im", 0), 0u);
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 5);

  CliRun custom = run({"orbit", "Q101", "--start", "y1=0.5", "y5=1.5", "y9=(0.2,0.1)", "--alpha", "0.3", "0.7", "0.5",
                    "2.5", "--steps", "2"});
  EXPECT_EQ(custom.code, 0) << custom.out << custom.err;
  EXPECT_EQ(run({"orbit", "Q101", "--start", "y2=0.5"}).code, 2);

  CliRun pole = run({"orbit", "Q12", "--start", "y1=0", "y5=0", "y9=0", "--alpha", "0.3", "0.7", "0.5", "0.6", "0.8",
                  "0.5", "--steps", "5"});
  EXPECT_EQ(pole.code, 1);
  EXPECT_EQ(nlohmann::json::parse(pole.out)["error"], "pole");
}

TEST(Cli, CheckHypergeometric) {
  CliRun r = run({"check-hypergeometric", "Q102", "--t", "0.08"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["linear_residual"].get<double>(), 1e-9);
  EXPECT_LT(j["gamma1_residual"].get<double>(), 1e-8);

  CliRun custom = run({"check-hypergeometric", "Q11", "--q", "0.3", "--alpha", "0.2", "0.6", "0.9", "0.4"});
  EXPECT_EQ(custom.code, 0) << custom.out;
  CliRun strict = run({"check-hypergeometric", "Q12", "--tol", "1e-30"});
  EXPECT_EQ(strict.code, 1);
}

TEST(Cli, CheckDegeneration) {
  CliRun r = run({"--output", "json", "check-degeneration", "Q11", "Q102"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["symbolic_limit"].get<bool>());
  EXPECT_NEAR(j["slope"].get<double>(), 1.0, 0.15);
  EXPECT_EQ(j["table"].size(), 4u);
  EXPECT_EQ(run({"check-degeneration", "Q101", "Q12"}).code, 2);
}

TEST(Config, FileEnvAndFlags) {
  Config c;
  std::istringstream in("# comment\n[run]\ntolerance = 1e-6\nrandomized-trials=5\nrng-seed = 42\n"
                        "precision-bits = 128\noutput = \"json\"\n");
  read_config(c, in);
  EXPECT_DOUBLE_EQ(c.tolerance, 1e-6);
  EXPECT_EQ(c.trials, 5);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.precision_bits, 128u);
  EXPECT_EQ(c.output, "json");

  std::istringstream bad("tolerance 3\n");
  EXPECT_THROW(read_config(c, bad), UsageError);
  std::istringstream unknown("colour = red\n");
  EXPECT_THROW(read_config(c, unknown), UsageError);

  std::string path = temp_file("qg_cli.toml", "output = json\nrandomized-trials = 3\n");
  CliRun r = run({"--config", path, "verify", "relations", "Q105", "--mode", "randomized"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"3 trials\""), std::string::npos) << r.out;
  EXPECT_EQ(run({"--config", "/nonexistent/qg.toml", "suite"}).code, 2);
}

TEST(Config, SeedEnvironmentVariable) {
  std::vector<std::string> args{"--output", "json", "verify", "relations", "Q105", "--mode", "randomized"};
  ::setenv("QG_SEED", "7", 1);
  std::string a = run(args).out, a2 = run(args).out;
  ::setenv("QG_SEED", "8", 1);
  std::string b = run(args).out;
  ::setenv("QG_SEED", "oops", 1);
  EXPECT_EQ(run(args).code, 2);
  ::unsetenv("QG_SEED");
  EXPECT_EQ(a, a2);
  EXPECT_EQ(nlohmann::json::parse(a)["ok"], true);
  EXPECT_EQ(nlohmann::json::parse(b)["ok"], true);
}

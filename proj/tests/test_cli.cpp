#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected in `args`.
Run run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + HOLOFORMS_CLI + " " + args;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

}  // namespace

TEST(Cli, VerifyIdentitiesPassesWithJsonLines) {
  const auto r = run_cli("verify --suite identities --trials 5 --seed 3 2>/dev/null");
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_FALSE(lines.empty());
  for (const auto& j : lines) {
    EXPECT_EQ(j["suite"], "identities");
    EXPECT_EQ(j["status"], "exact-pass");
    EXPECT_EQ(j["elapsed_ms"], 0);
    EXPECT_TRUE(j.contains("id"));
    EXPECT_TRUE(j.contains("trials"));
  }
}

TEST(Cli, SameSeedIsByteIdenticalAcrossThreadCounts) {
  const std::string args = "verify --suite all --trials 4 --seed 17 2>/dev/null";
  const auto a = run_cli(args, "HOLOFORMS_THREADS=1");
  const auto b = run_cli(args, "HOLOFORMS_THREADS=3");
  EXPECT_EQ(a.code, b.code);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonFileMatchesStdout) {
  const std::string path = testing::TempDir() + "holoforms_cli_report.jsonl";
  const auto a = run_cli("verify --suite cone --json " + path + " 2>/dev/null");
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(a.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), run_cli("verify --suite cone 2>/dev/null").out);
}

TEST(Cli, FaultInjectionFailsWithCounterexample) {
  const auto r = run_cli("verify --suite identities --trials 3 --fault phi0 2>/dev/null");
  EXPECT_EQ(r.code, 1);
  bool found = false;
  for (const auto& j : json_lines(r.out)) {
    if (j["status"] == "fail") {
      found = true;
      EXPECT_TRUE(j.contains("counterexample"));
      EXPECT_FALSE(j["counterexample"].is_null());
    }
  }
  EXPECT_TRUE(found);

  const auto cone = run_cli("verify --suite cone --fault cone 2>/dev/null");
  EXPECT_EQ(cone.code, 1);
  EXPECT_NE(cone.out.find("d_structure_form"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("verify --suite nosuch 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("verify --trials 0 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("frobnicate 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("decompose 'dx1^^dx2' 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("decompose 'dx1^dx9' 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("decompose 'dx1' 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("potential 'x1' --structure g3 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("hardy --profiles /nonexistent/profiles.txt 2>/dev/null").code, 2);
  EXPECT_EQ(run_cli("--help >/dev/null 2>&1").code, 0);
}

TEST(Cli, ParseErrorReportsPosition) {
  const auto r = run_cli("decompose 'dx1 ^ + dx2' 2>&1 >/dev/null");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("parse error"), std::string::npos);
  EXPECT_NE(r.out.find(" at 1:"), std::string::npos);
}

TEST(Cli, DecomposeDx12) {
  const auto r = run_cli("decompose 'dx1^dx2' --structure g2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("a7: 1/3 dx1^dx2 - 1/3 dx4^dx7 - 1/3 dx5^dx6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("sum_residual: 0"), std::string::npos);
  std::istringstream in(r.out);
  std::string line;
  int residuals = 0;
  while (std::getline(in, line)) {
    if (line.rfind("residual_", 0) == 0) {
      ++residuals;
      EXPECT_EQ(line.substr(line.size() - 3), ": 0") << line;
    }
  }
  EXPECT_EQ(residuals, 2);
}

TEST(Cli, PotentialEuclidean) {
  const auto g2 = run_cli("potential '1/6 x1^2 + 1/6 x2^2 + 1/6 x3^2 + 1/6 x4^2 + 1/6 x5^2 + 1/6 x6^2 + 1/6 x7^2' --structure g2");
  EXPECT_EQ(g2.code, 0);
  EXPECT_NE(g2.out.find("omega_prime: 0"), std::string::npos) << g2.out;
  EXPECT_NE(g2.out.find("lie_chain: exact-pass"), std::string::npos);

  const auto linear = run_cli("potential 'x1' --structure spin7");
  EXPECT_EQ(linear.code, 0);
  EXPECT_NE(linear.out.find("convexity: A=1 B=0 certified"), std::string::npos) << linear.out;
}

TEST(Cli, CatalogListsIdentities) {
  const auto r = run_cli("catalog");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 3) << line;
  }
  EXPECT_GE(rows, 8);
}

TEST(Cli, HardyBundledPasses) {
  const auto r = run_cli("hardy 2>/dev/null");
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  EXPECT_EQ(lines.size(), 7u);
  for (const auto& j : lines) EXPECT_EQ(j["status"], "numeric-pass");
}

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "luroth/commands.hpp"
#include "luroth/serialize.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LUROTH_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(LUROTH_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

const luroth::io::Json* find_check(const luroth::io::Json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["name"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST(CliPsi, BatemanFixtureHasZeroInvariant) {
  const CliRun r = run("psi --input " + fixture("bateman_config.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = luroth::io::parse(r.out);
  EXPECT_EQ(j["outputs"]["psi_quotient"], "0");
  EXPECT_EQ(j["outputs"]["psi_fano"], "0");
  EXPECT_EQ(j["outputs"]["F"], "0");
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c.dump();
}

TEST(CliPsi, GenericFixtureMatchesRegression) {
  const auto reg = luroth::io::parse(slurp(fixture("regression.json")));
  const CliRun r = run("psi --input " + fixture("generic_config.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = luroth::io::parse(r.out);
  EXPECT_EQ(j["outputs"]["psi_quotient"], reg["generic"]["psi_quotient"]);
  EXPECT_EQ(j["outputs"]["psi_fano"], reg["generic"]["psi_fano"]);
  EXPECT_EQ(j["outputs"]["lambda"], reg["lambda"]);
  EXPECT_NE(j["outputs"]["psi_quotient"], "0");
}

TEST(CliPsi, SixOnAConicIsDegenerateForTheQuotientRoute) {
  const CliRun r = run("psi --input " + fixture("six_on_conic_config.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = luroth::io::parse(r.out);
  EXPECT_EQ(j["outputs"]["F"], "0");
  EXPECT_NE(j["outputs"]["psi_fano"], "0");
  const auto* c = find_check(j, "psi/quotient-route");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ((*c)["status"], "degenerate");
}

TEST(CliPsi, MalformedInputExitsTwo) {
  EXPECT_EQ(run("psi --input " + fixture("truncated.json")).code, 2);
  EXPECT_EQ(run("psi --input " + fixture("does_not_exist.json")).code, 2);
  const std::string six_points = temp_path("six_points.json");
  write(six_points, R"({"points": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3],[3,2,1]]})");
  EXPECT_EQ(run("psi --input " + six_points).code, 2);
  const std::string floats = temp_path("floats.json");
  write(floats, R"({"points": [[1.5,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3],[3,2,1],[2,7,1]]})");
  EXPECT_EQ(run("psi --input " + floats).code, 2);
}

TEST(CliUsage, UnknownSuiteAndMissingArgumentsExitTwo) {
  EXPECT_EQ(run("verify --suite no-such-suite").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("psi --input " + fixture("generic_config.json") + " --format xml").code, 2);
}

TEST(CliLuroth, AllChecksPassOnFixture) {
  const CliRun r = run("luroth --input " + fixture("roberts.json"));
  ASSERT_EQ(r.code, 0);
  const auto j = luroth::io::parse(r.out);
  EXPECT_EQ(j["outputs"]["pentalateral"]["vertices"].size(), 10u);
  EXPECT_EQ(j["outputs"]["pentalateral"]["lines"].size(), 5u);
  for (const char* key : {"theta", "D", "branch_quartic", "quartic", "fifth_line"}) EXPECT_TRUE(j["outputs"].contains(key));
  ASSERT_GE(j["checks"].size(), 4u);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c.dump();
}

TEST(CliLuroth, ZeroCoefficientIsDegenerate) {
  const CliRun r = run("luroth --input " + fixture("roberts_zero_b.json"));
  EXPECT_EQ(r.code, 0);
  const auto j = luroth::io::parse(r.out);
  const auto* c = find_check(j, "luroth/closed-form");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ((*c)["status"], "degenerate");
  EXPECT_FALSE(c->contains("residual"));
}

TEST(CliLuroth, ReportRoundTrip) {
  const CliRun r = run("luroth --input " + fixture("roberts.json"));
  ASSERT_EQ(r.code, 0);
  const std::string path = temp_path("luroth_report.json");
  write(path, r.out);
  const CliRun v = run("verify --input " + path);
  EXPECT_EQ(v.code, 0) << v.out;
  const auto j = luroth::io::parse(v.out);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c.dump();
}

TEST(CliLuroth, TamperedReportFails) {
  const CliRun r = run("luroth --input " + fixture("roberts.json"));
  ASSERT_EQ(r.code, 0);
  auto j = luroth::io::parse(r.out);
  j["outputs"]["fifth_line"][0] = "12345";
  const std::string path = temp_path("tampered_report.json");
  write(path, j.dump());
  const CliRun v = run("verify --input " + path);
  EXPECT_EQ(v.code, 1);
  const auto out = luroth::io::parse(v.out);
  bool has_residual = false;
  for (const auto& c : out["checks"]) {
    EXPECT_EQ(c["status"] == "fail", c.contains("residual")) << c.dump();
    has_residual = has_residual || c.contains("residual");
  }
  EXPECT_TRUE(has_residual);
}

TEST(CliVerify, SuitesPassAndAreDeterministic) {
  const CliRun a = run("verify --suite homogeneity --seed 3 --count 4");
  const CliRun b = run("verify --suite homogeneity --seed 3 --count 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run("verify --suite differential-identity --seed 3 --count 5 --format text");
  const CliRun d = run("verify --suite differential-identity --seed 3 --count 5 --format text");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, d.out);
  EXPECT_NE(run("verify --suite homogeneity --seed 4 --count 4").out, a.out);
}

TEST(CliVerify, EveryNamedSuitePassesOnASmallRun) {
  for (const std::string name : {"infrastructure", "symmetry", "six-on-conic", "two-route", "cone", "roberts", "luroth",
                                 "bateman-points", "seventh-cubic", "generic-nonvanishing"}) {
    const CliRun r = run("verify --suite " + name + " --seed 2 --count 2");
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
  }
}

TEST(Report, ResidualPresentExactlyOnFailure) {
  luroth::RunReport r;
  r.pass("a");
  r.degenerate("b");
  r.expect("c", false, "off by one");
  EXPECT_EQ(r.exit_code(), 1);
  const auto j = r.to_json();
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"] == "fail", c.contains("residual"));
  luroth::RunReport ok;
  ok.pass("a");
  ok.degenerate("b");
  EXPECT_EQ(ok.exit_code(), 0);
}

TEST(Report, DigestIsSha256) {
  EXPECT_EQ(luroth::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Serialization, FormRoundTrip) {
  const auto j = luroth::io::parse(R"([{"exp":[2,0,1],"coeff":"-3/4"},{"exp":[0,1,2],"coeff":5}])");
  const luroth::Form f = luroth::io::form_from_json(j, 3);
  EXPECT_EQ(luroth::io::form_from_json(luroth::io::to_json(f), 3), f);
  EXPECT_EQ(luroth::io::to_json(f)[0]["coeff"], "-3/4");
  EXPECT_THROW(luroth::io::form_from_json(luroth::io::parse(R"([{"exp":[1,1],"coeff":"1"}])"), 3), luroth::io::InputError);
}

#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COXLINE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, ClassifyNef) {
  const auto r = run("--json classify 3 1 1 1");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["nef"], true);
  EXPECT_EQ(j["h0"], 7);
  EXPECT_EQ(j["chi"], 7);
}

TEST(Cli, ClassifyExceptionalCurve) {
  const auto j = json_of(run("--json classify 0 -1 0 0"));
  EXPECT_EQ(j["effective"], true);
  EXPECT_EQ(j["nef"], false);
  EXPECT_EQ(j["h0"], 1);
  EXPECT_EQ(j["stripped"]["exceptional_removed"][0], 1);
}

TEST(Cli, ClassifyNotEffective) {
  const auto j = json_of(run("--json classify 2 3 0 0"));
  EXPECT_EQ(j["effective"], false);
  EXPECT_EQ(j["h0"], 0);
}

TEST(Cli, BasisOfLine) {
  const auto j = json_of(run("--json basis 1 0 0 0"));
  EXPECT_EQ(j["h0"], 3);
  EXPECT_EQ(j["monomials"].size(), 3u);
  EXPECT_EQ(j["independent"], true);
  EXPECT_EQ(run("basis 2 3 0 0").out, "h0 = 0, empty basis\n");
}

TEST(Cli, Relations) {
  EXPECT_NE(run("relations --n 2").out.find("polynomial ring"), std::string::npos);
  const auto j = json_of(run("--json relations --n 3"));
  ASSERT_EQ(j["relations"].size(), 1u);
  EXPECT_EQ(j["relations"][0]["a"], "-2");
  EXPECT_EQ(j["relations"][0]["b"], "1");
  EXPECT_EQ(j["relations"][0]["geometric"], true);
}

TEST(Cli, ConfigFile) {
  const std::string path = ::testing::TempDir() + "coxline_cli_test.cfg";
  std::ofstream(path) << "t = -1 1/2 3 7/3\nq = 1 2 -1\n";
  const auto r = run("--config " + path + " --json relations");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["config"]["n"], 4);
  EXPECT_EQ(j["relations"].size(), 2u);
  EXPECT_EQ(run("--config " + path + " verify --dmax 2").code, 0);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --dmax 2 --n-list 2,3,4").code, 0);
  EXPECT_EQ(run("verify --dmax 1 --n-list 3 --corrupt-relation").code, 1);
  EXPECT_EQ(run("verify --dmax 2 --n-list 3 --inject-noncollinear").code, 1);
  EXPECT_EQ(run("verify --dmax 4 --n-list 3 --max-classes 5").code, 0);
  EXPECT_EQ(run("classify 1 2").code, 2);
  EXPECT_EQ(run("classify 1 x 0").code, 2);
  EXPECT_EQ(run("--config /nonexistent.cfg verify").code, 2);
}

TEST(Cli, IncompleteReportIsMarked) {
  const auto j = json_of(run("--json verify --dmax 4 --n-list 3 --max-classes 5"));
  EXPECT_EQ(j["reports"][0]["complete"], false);
}

TEST(Cli, JsonIsDeterministic) {
  const auto a = run("--json verify --dmax 2 --n-list 3 --inject-noncollinear");
  const auto b = run("--json verify --dmax 2 --n-list 3 --inject-noncollinear");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

}  // namespace

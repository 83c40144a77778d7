// Drives the phitile executable end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PHITILE_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("phitile_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("grid --mode ap --min-exp 3 --max-exp 2 --out " + path("x.svg")).status, 2);
  EXPECT_EQ(run("grid --mode xx --min-exp 0 --max-exp 4 --out " + path("x.svg")).status, 2);
  EXPECT_EQ(run("series --formula odd --n 0 --terms 0").status, 2);
  EXPECT_EQ(run("series --formula odd --n 0").status, 2);
  EXPECT_EQ(run("rabbits --shape circle --months 3 --out " + path("r.svg")).status, 2);
  EXPECT_EQ(run("subdivide --i 0 --j 0 --depth -1 --out " + path("s.svg")).status, 2);
  EXPECT_FALSE(fs::exists(path("x.svg")));
}

TEST_F(Cli, SeriesSequentEcho) {
  const CliRun r = run("series --formula arith --n -1 --terms 40 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(std::stod(j["float_echo"].get<std::string>()), 2.618034, 1e-6);
  EXPECT_EQ(j["K"], 40);

  const CliRun s = run("sequent --terms 40");
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out), j);

  const CliRun text = run("series --formula all --n 0 --terms 1");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("ALL_POWERS"), std::string::npos);
}

TEST_F(Cli, PiCertificate) {
  const CliRun r = run("pi-cert --n 3");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& f : j["facts"]) EXPECT_TRUE(f["pass"].get<bool>());
}

TEST_F(Cli, GridWritesDeterministicSvgAndJson) {
  const std::string args = "grid --mode ap --min-exp -3 --max-exp 3 --rays --divider 0 ";
  ASSERT_EQ(run(args + "--out " + path("a.svg") + " --json " + path("a.json")).status, 0);
  ASSERT_EQ(run(args + "--out " + path("b.svg") + " --json " + path("b.json")).status, 0);
  EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const auto tiles = nlohmann::json::parse(slurp(path("a.json")));
  EXPECT_EQ(tiles.size(), 6u);
}

TEST_F(Cli, SubdivideAndRabbits) {
  ASSERT_EQ(run("subdivide --i 1 --j 2 --depth 2 --out " + path("s.svg")).status, 0);
  EXPECT_NE(slurp(path("s.svg")).find("<svg"), std::string::npos);
  const CliRun r = run("rabbits --shape triangle --months 6 --verify --out " + path("t.svg") + " --json " + path("t.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(nlohmann::json::parse(slurp(path("t.json")))["tiles"].size(), 20u);
}

TEST_F(Cli, PrecisionEnvironment) {
  EXPECT_EQ(run("series --formula odd --n 0 --terms 3").status, 0);
  const std::string cmd = "PHITILE_PRECISION=64 " + std::string(PHITILE_CLI) + " series --formula odd --n 0 --terms 3 >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(raw), 2);
}

TEST_F(Cli, VerifyAllSmallWindow) {
  // Prints one line per criterion whatever the outcome.
  const CliRun r = run("verify-all --window 3 --months 4");
  for (int id = 1; id <= 8; ++id) {
    const bool listed = r.out.find("PASS " + std::to_string(id) + " ") != std::string::npos ||
                        r.out.find("FAIL " + std::to_string(id) + " ") != std::string::npos;
    EXPECT_TRUE(listed) << id;
  }
  EXPECT_EQ(run("verify-all --window 1").status, 2);
}

}  // namespace

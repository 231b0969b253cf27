#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "vclass/io.hpp"

#ifndef VCLASS_BIN
#error "VCLASS_BIN must name the CLI binary"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(VCLASS_BIN) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("vclass_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    auto r = run("fixture all --dir " + dir_.string());
    ASSERT_EQ(r.code, 0) << r.out;
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static std::string file(const std::string& name) { return (dir_ / name).string(); }
  static std::string write(const std::string& name, const std::string& body) {
    std::ofstream(file(name)) << body;
    return file(name);
  }

  static fs::path dir_;
};

fs::path Cli::dir_;

}  // namespace

TEST_F(Cli, ClassifyEx1) {
  auto r = run("classify " + file("ex1.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = vclass::json::parse(r.out);
  EXPECT_EQ(j["nowhere_dense"], true);
  EXPECT_EQ(j["compactly_generated"], false);
  EXPECT_EQ(j["bounded"], false);
  EXPECT_EQ(j["left_nondegenerate"]["source"], "paper");
  EXPECT_EQ(j["schema_version"], 1);
}

TEST_F(Cli, OutputIsByteIdentical) {
  for (auto& cmd : {"classify ", "validate ", "generators ", "chain "}) {
    auto a = run(std::string(cmd) + file("ex2.json"));
    auto b = run(std::string(cmd) + file("ex2.json"));
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST_F(Cli, EnumerateCount) {
  auto sp = write("twopoint.json", R"({"kind":"two_point","m_idempotent":true})");
  auto r = run("enumerate --spectrum " + sp + " --window 0..0 --count-only");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
  EXPECT_EQ(run("enumerate --spectrum " + sp + " --window 0..1 --count-only").out, "14\n");
  auto listed = run("enumerate --spectrum " + sp + " --window 0..0");
  EXPECT_EQ(listed.code, 0);
}

TEST_F(Cli, LocateInGap) {
  auto doc = write("three.json", R"({"spectrum":{"kind":"finite_chain","primes":[{"name":"0","idempotent":true},
    {"name":"q","idempotent":true},{"name":"m","idempotent":true}]},"system":[["0","0"],["m","m"]]})");
  auto r = run("locate " + doc + " --ideal prime:q");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(vclass::json::parse(r.out), vclass::json::parse(R"({"in_gap":["0","m"]})"));
  auto d = run("locate " + file("ex3.json") + " --degree 0 --ideal prime:m");
  EXPECT_EQ(vclass::json::parse(d.out), vclass::json::parse(R"({"in_interval":["m","m"]})"));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("validate " + file("ex0.json")).code, 0);
  auto bad = write("bad.json", R"({"spectrum":{"kind":"two_point","m_idempotent":true},
    "filtration":{"window":[0,1],"systems":{"0":[["0","m"]],"1":[["0","0"]]}}})");
  EXPECT_EQ(run("validate " + bad).code, 1);
  auto broken = write("broken.json", R"({"spectrum":{"kind":"nope"}})");
  auto r = run("validate " + broken);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("/spectrum/kind"), std::string::npos);
  EXPECT_EQ(run("validate " + file("missing.json")).code, 2);
  auto chain = run("chain " + file("ex0.json"));
  EXPECT_EQ(chain.code, 1);
  EXPECT_NE(chain.out.find("NotNowhereDense"), std::string::npos);
}

TEST_F(Cli, ChainAndGenerators) {
  auto r = run("chain " + file("ex2.json") + " --format text");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("Q ← R_{q_1} ← R_{q_2}"), std::string::npos);
  auto g = run("generators " + file("hrs.json") + " --format text");
  EXPECT_NE(g.out.find("K(-inf,R)[n] for n < 0"), std::string::npos);
}

TEST_F(Cli, XiAndTor) {
  auto r = run("xi " + file("hrs.json") + " --degree 0 --module \"loc:m / prime:m\"");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = vclass::json::parse(r.out);
  EXPECT_EQ(j["member"], true);
  EXPECT_EQ(j["homological"], true);
  auto t = run("tor " + file("ex3.json") + " --degree 0");
  ASSERT_EQ(t.code, 0) << t.out;
  auto tj = vclass::json::parse(t.out);
  EXPECT_EQ(tj["mismatches"], 0);
}

TEST_F(Cli, Diagram) {
  auto out = file("ex0.svg");
  auto r = run("diagram " + file("ex0.json") + " --out " + out);
  ASSERT_EQ(r.code, 0) << r.out;
  std::ifstream in(out);
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(svg.find("href"), std::string::npos);  // no external assets
}

TEST_F(Cli, FixtureNames) {
  EXPECT_EQ(run("fixture nothing --dir " + file("")).code, 2);
  for (auto& n : {"ex0", "ex1", "ex2", "ex3", "hrs", "stable_constant"}) EXPECT_TRUE(fs::exists(file(std::string(n) + ".json")));
}

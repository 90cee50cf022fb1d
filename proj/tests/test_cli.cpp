#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;
using wordchains::cli::run;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wordchains-cli-" + std::string(::testing::UnitTest::GetInstance()
                                                ->current_test_info()
                                                ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(CliTest, GeneratedFamiliesVerify) {
  struct Case {
    std::vector<std::string> gen;
    std::string kind;
    std::string size;
  };
  const std::vector<Case> cases{
      {{"dc3"}, "chain-dec", "7 equations"},
      {{"dc3plus"}, "chain-dec", "7 equations"},
      {{"dc4"}, "chain-dec", "12 equations"},
      {{"quartic", "m=4"}, "independent", "16 equations"},
      {{"quadratic", "n=5"}, "independent", "3 equations"},
      {{"chain", "n=5"}, "chain-dec", "18 equations"},
      {{"toy-triple"}, "independent", "3 equations"},
      {{"toy-pair"}, "independent", "2 equations"},
      {{"chainify"}, "chain-dec", "6 equations"},
  };
  for (const auto& c : cases) {
    const std::string prefix = path(c.gen[0]);
    std::vector<std::string> args{"gen"};
    args.insert(args.end(), c.gen.begin(), c.gen.end());
    args.insert(args.end(), {"--out", prefix});
    Invocation g = cli(args);
    ASSERT_EQ(g.code, 0) << c.gen[0] << ": " << g.err;
    EXPECT_TRUE(contains(g.out, c.size)) << g.out;
    EXPECT_TRUE(contains(g.out, "certificate verified")) << g.out;

    Invocation v = cli({"verify", c.kind, prefix + ".eqs", "--cert", prefix + ".cert.json"});
    EXPECT_EQ(v.code, 0) << c.gen[0] << ": " << v.out << v.err;
    EXPECT_TRUE(contains(v.out, "Verified: ")) << v.out;
    EXPECT_TRUE(contains(v.out, "certificate checked exactly")) << v.out;
  }
}

TEST_F(CliTest, VerifyDc3PrintsWitnesses) {
  ASSERT_EQ(cli({"gen", "dc3", "--out", path("dc3")}).code, 0);
  Invocation v = cli({"verify", "chain-dec", path("dc3.eqs"), "--cert", path("dc3.cert.json")});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(contains(v.out, "Verified: decreasing chain of 7 equations (monoid")) << v.out;
  EXPECT_TRUE(contains(v.out, "w_0: x=1, y=a, z=b")) << v.out;

  Invocation searched = cli({"verify", "chain-dec", path("dc3.eqs")});
  EXPECT_EQ(searched.code, 0) << searched.out;
  EXPECT_TRUE(contains(searched.out, "witnesses searched up to max_len 3")) << searched.out;
}

TEST_F(CliTest, VerifyIncreasingChainBySearch) {
  write("inc.eqs", "@vars xyz\nz = 1\ny = 1\nx = 1\nxy = yx\nxz = zx\n");
  Invocation v = cli({"verify", "chain-inc", path("inc.eqs")});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_TRUE(contains(v.out, "increasing chain of 5 equations")) << v.out;
}

TEST_F(CliTest, VerifyRefutation) {
  write("bad.eqs", "x = 1\nxy = yx\n");
  Invocation v = cli({"verify", "chain-dec", path("bad.eqs")});
  EXPECT_EQ(v.code, 1);
  EXPECT_TRUE(contains(v.out, "Refuted at index 1")) << v.out;

  Invocation j = cli({"verify", "chain-dec", path("bad.eqs"), "--json"});
  EXPECT_EQ(j.code, 1);
  EXPECT_TRUE(contains(j.out, "\"outcome\": \"refuted\"")) << j.out;
  EXPECT_TRUE(contains(j.out, "\"index\": 1")) << j.out;
}

TEST_F(CliTest, VerifyLimitIsInconclusive) {
  write("pair.eqs", "@mode semigroup\nxyz = zyx\nxyyz = zyyx\n");
  Invocation v = cli({"verify", "independent", path("pair.eqs"), "--max-len", "4", "--limit", "10"});
  EXPECT_EQ(v.code, 2) << v.out;
  EXPECT_TRUE(contains(v.out, "Inconclusive")) << v.out;
}

TEST_F(CliTest, VerifyDataErrors) {
  ASSERT_EQ(cli({"gen", "dc3", "--out", path("dc3")}).code, 0);
  ASSERT_EQ(cli({"gen", "dc3plus", "--out", path("dc3plus")}).code, 0);

  // Certificate of the wrong length: drop the last witness.
  std::ifstream in(path("dc3.cert.json"));
  std::string cert((std::istreambuf_iterator<char>(in)), {});
  auto last = cert.rfind("\"x=");
  auto prev = cert.rfind(',', last);
  cert.erase(prev, cert.find('"', last + 1) + 1 - prev);
  write("short.cert.json", cert);
  EXPECT_EQ(cli({"verify", "chain-dec", path("dc3.eqs"), "--cert", path("short.cert.json")}).code,
            65);

  EXPECT_EQ(cli({"verify", "independent", path("dc3.eqs"), "--cert", path("dc3.cert.json")}).code,
            65);
  EXPECT_EQ(cli({"verify", "chain-dec", path("dc3.eqs"), "--cert", path("dc3plus.cert.json")}).code,
            65);
  EXPECT_EQ(cli({"verify", "chain-dec", path("dc3.eqs"), "--mode", "semigroup"}).code, 65);

  write("broken.eqs", "xy = yx\nx == y\n");
  Invocation b = cli({"verify", "chain-dec", path("broken.eqs")});
  EXPECT_EQ(b.code, 65);
  EXPECT_TRUE(contains(b.err, "line 2")) << b.err;

  EXPECT_EQ(cli({"verify", "chain-dec", path("missing.eqs")}).code, 66);
}

TEST_F(CliTest, UsageErrors) {
  write("ok.eqs", "xy = yx\n");
  EXPECT_EQ(cli({"verify", "chain-sideways", path("ok.eqs")}).code, 64);
  EXPECT_EQ(cli({"frobnicate"}).code, 64);
  EXPECT_EQ(cli({}).code, 64);
  EXPECT_EQ(cli({"gen", "dc7"}).code, 64);
  EXPECT_EQ(cli({"gen", "quartic", "n=3", "--out", path("q")}).code, 64);
  write("semi.eqs", "@mode semigroup\nxy = yx\n");
  EXPECT_EQ(cli({"verify", "chain-dec", path("semi.eqs"), "--max-len", "0"}).code, 64);
  EXPECT_EQ(cli({"verify", "chain-dec", path("ok.eqs"), "--alphabet", ""}).code, 64);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, GenChainifyFromFiles) {
  ASSERT_EQ(cli({"gen", "toy-pair", "--out", path("pair")}).code, 0);
  Invocation g = cli({"gen", "chainify", "--from-corpus", path("pair.eqs"), "--from-cert",
               path("pair.cert.json"), "--out", path("chain")});
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_TRUE(contains(g.out, "6 equations")) << g.out;
  EXPECT_EQ(cli({"gen", "chainify", "--from-corpus", path("pair.eqs"), "--out", path("x")}).code,
            64);
  ASSERT_EQ(cli({"gen", "dc3", "--out", path("dc3")}).code, 0);
  EXPECT_EQ(cli({"gen", "chainify", "--from-corpus", path("dc3.eqs"), "--from-cert",
                 path("dc3.cert.json"), "--out", path("y")})
                .code,
            65);
}

TEST_F(CliTest, GenJsonIsACertificate) {
  Invocation g = cli({"gen", "dc4", "--out", path("dc4"), "--json"});
  ASSERT_EQ(g.code, 0);
  EXPECT_TRUE(contains(g.out, "\"kind\": \"chain-decreasing\"")) << g.out;
}

TEST(Cli, Solve) {
  Invocation unsat = cli({"solve", "xx = x", "--mode", "semigroup"});
  EXPECT_EQ(unsat.code, 1);
  EXPECT_TRUE(contains(unsat.out, "unsatisfiable")) << unsat.out;

  Invocation sat = cli({"solve", "xx = x"});
  EXPECT_EQ(sat.code, 0);
  EXPECT_EQ(sat.out, "solution: x=1\n");

  Invocation j = cli({"solve", "xyz = zxy", "--mode", "semigroup", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(contains(j.out, "\"status\": \"solution\"")) << j.out;

  EXPECT_EQ(cli({"solve", "x == y"}).code, 65);
  EXPECT_EQ(cli({"solve", "xy = yx", "--mode", "group"}).code, 64);
}

TEST(Cli, Bounds) {
  Invocation b = cli({"bounds", "3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(contains(b.out, "n=3: dc ≥ 7, is ≥ 3")) << b.out;
  EXPECT_EQ(cli({"bounds", "0"}).code, 64);
  Invocation j = cli({"bounds", "12", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(contains(j.out, "\"dc\": 88")) << j.out;
}

TEST(Cli, Identity) {
  Invocation r = cli({"identity", "ab", "a", "ba", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "holds for k < 3, fails at k=3")) << r.out;
  EXPECT_EQ(cli({"identity", "3"}).code, 64);
}

TEST(Cli, Q5AndExotic) {
  Invocation q = cli({"q5", "2"});
  EXPECT_EQ(q.code, 0);
  EXPECT_TRUE(contains(q.out, "no candidates")) << q.out;

  Invocation e = cli({"exotic", "10"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(contains(e.out, "p=1: a1^1 solves x^1 = x^2, fails x^0 = x^1")) << e.out;
  EXPECT_TRUE(contains(e.out, "10 separating witnesses verified")) << e.out;
}

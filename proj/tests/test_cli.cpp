#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "sepdim/family_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEPDIM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(SEPDIM_SAMPLES_DIR) + "/" + name; }

bool has_line(const std::string& out, const std::string& line) {
  return out.find(line + "\n") != std::string::npos;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sepdim-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BoundDegeneratePath) {
  const auto r = run("bound-degenerate " + sample("p4.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "verdict: ok"));
  EXPECT_TRUE(has_line(r.out, "sizes.k: 1"));
}

TEST_F(CliTest, BoundDegenerateStar) {
  const auto r = run("bound-degenerate " + sample("k15.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "verdict: ok"));
}

TEST_F(CliTest, MalformedGraphIsAnInputError) {
  EXPECT_EQ(run("bound-degenerate " + sample("malformed.txt")).code, 2);
  EXPECT_EQ(run("bound-degenerate " + path("missing.txt")).code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("exact " + sample("k3.txt") + " --format xml").code, 2);
}

TEST_F(CliTest, BoundSubdivision) {
  const auto k3 = run("bound-subdivision " + sample("k3.txt"));
  EXPECT_EQ(k3.code, 0);
  EXPECT_TRUE(has_line(k3.out, "sizes.subdivided_n: 6"));
  const auto c4 = run("bound-subdivision " + sample("c4.txt"));
  EXPECT_EQ(c4.code, 0);
  EXPECT_TRUE(has_line(c4.out, "sizes.family: 4"));
  const auto empty = run("bound-subdivision " + sample("edgeless.txt"));
  EXPECT_EQ(empty.code, 0);
  EXPECT_TRUE(has_line(empty.out, "sizes.family: 0"));
}

TEST_F(CliTest, Exact) {
  const auto k3 = run("exact " + sample("k3.txt"));
  EXPECT_EQ(k3.code, 0);
  EXPECT_TRUE(has_line(k3.out, "pi: 0"));
  const auto c4 = run("exact " + sample("c4.txt"));
  EXPECT_EQ(c4.code, 0);
  EXPECT_TRUE(has_line(c4.out, "pi: 2"));
  const auto k4 = run("exact " + sample("k4.txt") + " --limit 0");
  EXPECT_EQ(k4.code, 3);
  EXPECT_TRUE(has_line(k4.out, "verdict: exceeded"));
}

TEST_F(CliTest, Verify) {
  EXPECT_EQ(run("verify " + sample("c4.txt") + " " + sample("c4_witness.json")).code, 0);
  const auto bad = run("verify " + sample("c4.txt") + " " + sample("c4_identity.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(has_line(bad.out, "counterexample: [[1,4],[2,3]]"));
  EXPECT_EQ(run("verify " + sample("c4.txt") + " " + sample("k3_identity.json")).code, 2);
}

TEST_F(CliTest, CanonicalDim) {
  const auto three = run("canonical-dim 3");
  EXPECT_EQ(three.code, 0);
  EXPECT_TRUE(has_line(three.out, "dim: 2"));
  const auto two = run("canonical-dim 2");
  EXPECT_EQ(two.code, 0);
  EXPECT_TRUE(has_line(two.out, "dim: 1"));
  EXPECT_EQ(run("canonical-dim 20").code, 3);
}

TEST_F(CliTest, LowerHarness) {
  const auto three = run("lower-harness 3");
  EXPECT_EQ(three.code, 0);
  EXPECT_TRUE(has_line(three.out, "realizer_valid: true"));
  EXPECT_TRUE(has_line(three.out, "bounds.pi>=dim(C_p): true"));
  const auto two = run("lower-harness 2");
  EXPECT_EQ(two.code, 0);
  EXPECT_TRUE(has_line(two.out, "sizes.pi: 0"));
  const auto ten = run("lower-harness 10");
  EXPECT_EQ(ten.code, 3);
  EXPECT_NE(ten.out.find("sizes.construction: "), std::string::npos);
}

TEST_F(CliTest, EmittedFamiliesVerify) {
  for (const char* g : {"p4.txt", "k4.txt", "c4.txt", "k15.txt"}) {
    const std::string fam = path(std::string(g) + ".json");
    ASSERT_EQ(run("bound-degenerate " + sample(g) + " --out " + fam).code, 0);
    EXPECT_EQ(run("verify " + sample(g) + " " + fam).code, 0) << g;
    const std::string sub = path(std::string(g) + ".sub.json");
    ASSERT_EQ(run("bound-subdivision " + sample(g) + " --out " + sub).code, 0);
    EXPECT_EQ(run("verify --subdivide " + sample(g) + " " + sub).code, 0) << g;
  }
}

TEST_F(CliTest, SubdividedGraphOutput) {
  const std::string fam = path("k4.sub.json"), graph = path("k4.half.txt");
  ASSERT_EQ(run("bound-subdivision " + sample("k4.txt") + " --out " + fam + " --graph-out " + graph).code,
            0);
  EXPECT_EQ(run("verify " + graph + " " + fam).code, 0);
}

TEST_F(CliTest, ReportsAreDeterministic) {
  for (const char* args : {"bound-degenerate", "bound-subdivision", "exact"}) {
    for (const char* fmt : {"text", "structured"}) {
      const std::string cmd =
          std::string(args) + " " + sample("k4.txt") + " --seed 5 --format " + std::string(fmt);
      EXPECT_EQ(run(cmd).out, run(cmd).out) << cmd;
    }
  }
  const std::string a = path("a.json"), b = path("b.json");
  run("bound-degenerate " + sample("k4.txt") + " --seed 9 --out " + a);
  run("bound-degenerate " + sample("k4.txt") + " --seed 9 --out " + b);
  std::ifstream fa(a), fb(b);
  std::string ta((std::istreambuf_iterator<char>(fa)), {}), tb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, tb);
  EXPECT_NO_THROW(sepdim::parse_family(ta));
}

TEST_F(CliTest, StructuredReportIsJson) {
  const auto r = run("exact " + sample("c4.txt") + " --format structured");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("command"), "exact");
  EXPECT_EQ(j.at("pi"), 2);
  EXPECT_EQ(j.at("witness").size(), 2u);
  EXPECT_EQ(j.at("input_digest").get<std::string>().size(), 64u);
}

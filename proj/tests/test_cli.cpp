#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ringlab/harness.hpp"
#include "ringlab/report.hpp"

namespace fs = std::filesystem;
using ringlab::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ringlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    ASSERT_EQ(run({"catalog", "--write", dir_.string()}).code, 0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& id) const { return (dir_ / (id + ".json")).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ClassifyDecomposedPositive) {
  const auto r = run({"classify", file("decomposed_positive")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "MinimalDecomposed → fixed: MinimalDecomposed");
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('\n') + 1));
  EXPECT_EQ(j.at("extension").at("kind"), "MinimalDecomposed");
  EXPECT_EQ(j.at("fixed").at("kind"), "MinimalDecomposed");
}

TEST_F(CliTest, ClassifyEqualRings) {
  const auto r = run({"classify", write("eq.json", R"json({"ring":"gf(3,2)","subring":"all"})json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "TrivialEqual");
}

TEST_F(CliTest, ClassifyOversizedRingIsCapError) {
  const auto r = run({"--max-order", "32", "classify", file("inert_positive")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST_F(CliTest, ClassifySchemaErrorNamesField) {
  const auto r = run({"classify", write("bad.json", "{\"ring\": \"zmod(4)\",\n \"subrnig\": \"all\"}")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("subrnig"), std::string::npos);
  const auto s = run({"classify", write("broken.json", "{\"ring\": \"zmod(4)\",\n\n \"subring\" }")});
  EXPECT_EQ(s.code, 2);
  EXPECT_NE(s.err.find("line 3"), std::string::npos) << s.err;
}

TEST_F(CliTest, VerifyAllExitsZeroAndWritesValidReport) {
  const auto report = (dir_ / "out.json").string();
  const auto r = run({"verify", "--all", "--report", report, "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  std::string why;
  EXPECT_TRUE(ringlab::is_valid_report(j, &why)) << why;
  EXPECT_EQ(j.at("totals").at("FAIL"), 0);
}

TEST_F(CliTest, VerifyFinitePairingWithFuncfieldTheoremIsError) {
  const auto r = run({"verify", "--check", "thm_3_6", file("equal_rings")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("thm_3_6"), std::string::npos);
  const auto s = run({"verify", write("req.json", R"json({"ring":"gf(2,2)","checks":["thm_3_6"]})json")});
  EXPECT_EQ(s.code, 2);
}

TEST_F(CliTest, VerifyUnknownTheoremIsError) {
  EXPECT_EQ(run({"verify", "--check", "lemma_9_9", "--all"}).code, 2);
}

TEST_F(CliTest, VerifyFilesAndChecks) {
  const auto r = run({"verify", "--check", "lemma_2_1,thm_2_6", file("inert_positive"), file("char_violation")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("4 verdicts"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("HYPOTHESIS-VIOLATION"), std::string::npos);
}

TEST_F(CliTest, SameSeedSameReportBytes) {
  const auto a = run({"verify", "--all", "--json", "--seed", "5"});
  const auto b = run({"verify", "--all", "--json", "--seed", "5", "--jobs", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, ExploreChainF2F4F16) {
  const auto r = run({"explore", "--ring", "gf(2,4)", "--list-intermediate", "--base", "gf(2,1)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("intermediate rings: 3"), std::string::npos) << r.out;
  const auto p2 = r.out.find("|A| = 2 "), p4 = r.out.find("|A| = 4 "), p16 = r.out.find("|A| = 16 ");
  EXPECT_TRUE(p2 < p4 && p4 < p16 && p16 != std::string::npos) << r.out;
}

TEST_F(CliTest, ExploreSpecOfZmod12) {
  const auto r = run({"explore", "--ring", "zmod(12)", "--spec"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Spec(T): 2\n  (2)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\n  (3)"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExploreConductorOfDiagonal) {
  const auto r = run({"explore", "--ring", "prod(gf(3,1),gf(3,1))", "--conductor", "--subring", "diag"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("= {(0,0)}"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExploreCapsAndUsage) {
  EXPECT_EQ(run({"--max-order", "8", "explore", "--ring", "gf(2,4)"}).code, 2);
  EXPECT_EQ(run({"explore"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, ExploreWithActionReportsFixedLevel) {
  const auto r = run({"explore", "--ring", "prod(gf(3,2),gf(3,2))", "--subring", "diag", "--action",
                      "componentwise(frobenius,frobenius)"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("R^G ⊆ T^G: MinimalDecomposed"), std::string::npos) << r.out;
}

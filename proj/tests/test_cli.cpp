#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "nilhecke/cli.hpp"

using namespace nilhecke;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SchubertListing) {
  const CliRun r = run({"schubert", "--group", "U3", "--ring", "Z", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "S_{s1s2s1} = e1^2*e2\n"
            "S_{s1s2} = e1*e2\n"
            "S_{s2s1} = e1^2\n"
            "S_{s2} = e1 + e2\n"
            "S_{s1} = e1\n"
            "S_{1} = 1\n");
}

TEST(Cli, Torsion) {
  EXPECT_EQ(run({"torsion", "--group", "PSU3"}).out, "3\n");
  EXPECT_EQ(run({"torsion", "--group", "SO3"}).out, "2\n");
  const auto j = nlohmann::json::parse(run({"torsion", "--group", "Sp2", "--format", "json"}).out);
  EXPECT_EQ(j["torsion_index"], 1);
}

TEST(Cli, FamilyJsonIsSortedByLengthThenWord) {
  const auto j = nlohmann::json::parse(run({"schubert", "--group", "U3", "--format", "json"}).out);
  EXPECT_EQ(j["group"], "U3");
  EXPECT_EQ(j["ring"], "Z");
  std::vector<std::vector<int>> words;
  for (const auto& m : j["members"]) words.push_back(m["word"].get<std::vector<int>>());
  EXPECT_EQ(words, (std::vector<std::vector<int>>{{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}}));
  const auto& top = j["members"][5]["poly"];
  EXPECT_EQ(top["vars"], (std::vector<std::string>{"e1", "e2", "e3"}));
  EXPECT_EQ(top["terms"][0]["exp"], (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(top["terms"][0]["coeff"], "1");
}

TEST(Cli, MatrixJson) {
  const auto j = nlohmann::json::parse(run({"matrix", "--group", "U3", "--generator", "1", "--format", "json"}).out);
  EXPECT_EQ(j["generator"], 1);
  EXPECT_EQ(j["basis_order"][0], (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(j["entries"].size(), 6u);
  // Entry (6,1) is -p3.
  const auto& e = j["entries"][5][0];
  EXPECT_EQ(e["vars"], (std::vector<std::string>{"p1", "p2", "p3"}));
  EXPECT_EQ(e["terms"][0]["coeff"], "-1");
  EXPECT_EQ(e["terms"][0]["exp"], (std::vector<int>{0, 0, 1}));
}

TEST(Cli, Poincare) {
  const CliRun r = run({"poincare", "--group", "Sp2", "--subgroup", "2e1,2e2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 + t^4\n");
  const CliRun c = run({"poincare", "--group", "Sp2", "--subgroup", "2e1,2e2", "--series", "coset"});
  EXPECT_NE(c.out.find("warning: non-parabolic"), std::string::npos);
}

TEST(Cli, VerifyBraidSuite) {
  const CliRun r = run({"verify", "--suite", "braid", "--group", "Sp2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, TableCheckRow) {
  const CliRun r = run({"table-check", "--group", "SO3", "--max-degree", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("SO3: PASS", 0), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"torsion", "--group", "E8"}).code, 2);
  EXPECT_EQ(run({"schubert", "--group", "U3", "--ring", "R"}).code, 2);
  EXPECT_EQ(run({"schubert", "--group", "U3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"matrix", "--group", "U3", "--generator", "7"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  EXPECT_EQ(run({"torsion", "--group", "U3", "--datum-file", "x.json"}).code, 2);
  // Computation errors.
  const CliRun so3 = run({"schubert", "--group", "SO3", "--ring", "Z"});
  EXPECT_EQ(so3.code, 1);
  EXPECT_NE(so3.err.find("TorsionNotInvertible"), std::string::npos);
  EXPECT_EQ(run({"invariants", "--group", "U2", "--ring", "Z/2", "--relations", "e1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"schubert", "--group", "Sp2", "--format", "json"},
           {"decompose", "--group", "U2", "--ring", "Z/2", "--relations", "e1+e2", "--max-degree", "4"},
           {"tensor", "--group", "Sp2", "--subgroup", "2e1,2e2", "--ring", "Z/2", "--max-degree", "3"}}) {
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, DatumFile) {
  const CliRun r = run({"torsion", "--datum-file", std::string(TEST_DATA_DIR) + "/g2.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(run({"torsion", "--datum-file", std::string(TEST_DATA_DIR) + "/bad_cartan.json"}).code, 2);
  EXPECT_EQ(run({"torsion", "--datum-file", std::string(TEST_DATA_DIR) + "/affine.json"}).code, 1);
}

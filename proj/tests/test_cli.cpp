#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace goodsets;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GOODSETS_DATA_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("goodsets_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = "") const {
    auto p = (path_ / name).string();
    if (!content.empty()) std::ofstream(p) << content;
    return p;
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, CheckGoodSet) {
  auto r = run({"check", "--input", data("s2.json")});
  EXPECT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["good"], true);
  EXPECT_EQ(j["boundary_size"], 4);
  EXPECT_EQ(j["full"], false);
}

TEST(Cli, CheckCycle) {
  auto r = run({"check", "--input", data("cycle.json")});
  EXPECT_EQ(r.code, 1);
  auto j = r.json();
  EXPECT_EQ(j["good"], false);
  EXPECT_EQ(j["rank"], 3);
}

TEST(Cli, GeodesicIsWholeSet) {
  auto r = run({"geodesic", "--input", data("s4z.json"), "--from", "y1", "--to", "y4"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["size"], 5);
  EXPECT_EQ(j["indices"], Json::parse("[1,2,3,4,5]"));
  EXPECT_EQ(j["minima"], 1);
  auto by_tuple = run({"geodesic", "-i", data("s4z.json"), "--from", "x1,x2,x3,x4", "--to", "4"});
  EXPECT_EQ(by_tuple.out, r.out);
}

TEST(Cli, GeodesicUnrelated) {
  TempDir tmp;
  auto in = tmp.file("apart.json", R"({"dimension":2,"points":[["a","p"],["b","q"]]})");
  auto r = run({"geodesic", "-i", in, "--from", "1", "--to", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["related"], false);
  EXPECT_EQ(run({"geodesic", "-i", in, "--from", "1", "--to", "9"}).code, 2);
}

TEST(Cli, BoundaryTestAndEnumerate) {
  auto yes = run({"boundary", "-i", data("s4.json"), "--boundary", "x1,x2,x3,a4"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.json()["is_boundary"], true);
  auto no = run({"boundary", "-i", data("s4.json"), "--boundary", "x1,x2,x3,a2"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.json()["is_boundary"], false);

  auto all = run({"boundary", "-i", data("s4.json")});
  EXPECT_EQ(all.code, 0);
  auto j = all.json();
  EXPECT_EQ(j["boundary_size"], 4);
  EXPECT_EQ(j["truncated"], false);
  EXPECT_EQ(j["count"], j["boundaries"].size());

  auto capped = run({"boundary", "-i", data("s4.json"), "--cap", "2"});
  EXPECT_EQ(capped.json()["truncated"], true);

  auto bad = run({"boundary", "-i", data("cycle.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.json()["good"], false);
}

TEST(Cli, Components) {
  auto r = run({"components", "-i", data("s4.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["full_components"], Json::parse("[[1],[2],[3],[4]]"));
  EXPECT_EQ(r.json()["related_components"], Json::parse("[[1],[2],[3],[4]]"));
  auto full = run({"components", "-i", data("s4z.json"), "--kind", "full"});
  EXPECT_EQ(full.json()["full_components"], Json::parse("[[1,2,3,4,5]]"));
  EXPECT_FALSE(full.json().contains("related_components"));
}

TEST(Cli, BudgetExceeded) {
  auto r = run({"components", "-i", data("s4z.json"), "--budget-subsets", "3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, InputErrors) {
  TempDir tmp;
  EXPECT_EQ(run({"check", "-i", tmp.file("missing.json")}).code, 2);
  auto bad = run({"check", "-i", tmp.file("bad.json", "{\"dimension\":2,\n\"points\":[[\"a\"]]}")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("parse error"), std::string::npos);
  auto syntax = run({"check", "-i", tmp.file("syntax.json", "{\"dimension\":2,\n\"points\":[[\"a\",]]}")});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"check", "-i", data("s2.json"), "--format", "xml"}).code, 2);
}

TEST(Cli, TagCoordinates) {
  TempDir tmp;
  auto in = tmp.file("shared.json", R"({"dimension":2,"points":[["a","a"],["a","b"]]})");
  auto tagged = run({"boundary", "-i", in});
  EXPECT_EQ(tagged.code, 0) << tagged.err;
  EXPECT_EQ(tagged.json()["boundaries"], Json::parse(R"([["a@1"],["a@2"],["b"]])"));
  auto raw = run({"boundary", "-i", in, "--no-tag-coordinates"});
  EXPECT_EQ(raw.code, 2);
  auto check = run({"check", "-i", in, "--no-tag-coordinates"});
  EXPECT_EQ(check.code, 0);
  EXPECT_FALSE(check.json().contains("full"));
}

TEST(Cli, Solve) {
  auto r = run({"solve", "-i", data("s2.json"), "-f", data("s2_f.json"), "-b", "x1,x2,x3,a2"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j["verified"], true);
  Json expected = Json::parse(R"([
    {"coordinate":1,"symbol":"x1","value":"0"},
    {"coordinate":2,"symbol":"x2","value":"0"},
    {"coordinate":3,"symbol":"a1","value":"2"},
    {"coordinate":3,"symbol":"x3","value":"0"},
    {"coordinate":4,"symbol":"a2","value":"0"},
    {"coordinate":4,"symbol":"x4","value":"1"}])");
  EXPECT_EQ(j["solution"], expected);

  auto shifted = run({"solve", "-i", data("s2.json"), "-f", data("s2_f.json"), "-b", "x1,x2,x3,a2",
                      "--boundary-values", "a2=1/2"});
  EXPECT_EQ(shifted.code, 0);
  EXPECT_EQ(shifted.json()["solution"][2]["value"], "3/2");

  auto stale = run({"solve", "-i", data("s4.json"), "-f", data("s2_f.json"), "-b", "x1,x2,x3,a2"});
  EXPECT_EQ(stale.code, 2);  // function table does not cover S4
}

TEST(Cli, FamilyWritesFixture) {
  TempDir tmp;
  auto out = tmp.file("s6.json");
  auto r = run({"family", "--name", "S", "--param", "6", "--output", out});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), serialize_point_set(family_S(6)));

  std::ifstream fixture(data("s4z.json"));
  std::stringstream fs4z;
  fs4z << fixture.rdbuf();
  EXPECT_EQ(fs4z.str(), serialize_point_set(family_S4n_plus_z(1)));
  EXPECT_EQ(run({"family", "--name", "S", "--param", "0"}).code, 2);
}

TEST(Cli, VerifyPaper) {
  auto r = run({"verify-paper", "--n-max", "1"});
  EXPECT_EQ(r.code, 0);
  auto claims = r.json()["claims"];
  ASSERT_EQ(claims.size(), 6u);
  for (const auto& c : claims) {
    EXPECT_TRUE(c.contains("id") && c.contains("params") && c.contains("witness"));
    EXPECT_EQ(c["pass"], true) << c.dump();
  }
}

TEST(Cli, CsvAndDeterminism) {
  auto csv = run({"check", "-i", data("s2.json"), "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "path,value\n/good,true\n/rank,2\n/points,2\n/columns,6\n/boundary_size,4\n/full,false\n");
  for (auto args : std::vector<std::vector<std::string>>{
           {"components", "-i", data("s4z.json")},
           {"boundary", "-i", data("s4.json")},
           {"verify-paper", "--n-max", "2", "--format", "csv"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

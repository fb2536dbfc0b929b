#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "input.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fibfull::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FIBFULL_DATA_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("fibfull_test_" + name);
  std::ofstream(p) << body;
  return p;
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, TableText) {
  auto r = run({"table", data("twisted_cubic.ideal"), "--window", "-2", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "P_h(m) = 3*m+1"));
  EXPECT_TRUE(contains(r.out, "    h0   0   0   1   4   7\n"));
  EXPECT_TRUE(contains(r.out, "    h1   5   2   0   0   0\n"));
  EXPECT_TRUE(contains(r.out, "h2(nu) = 0 for all nu"));
}

TEST(Cli, TableJson) {
  auto r = run({"table", data("plane_cubic_point.ideal"), "--window", "-5", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  std::vector<long> h0 = j["signature"]["h"][0];
  EXPECT_EQ(h0, (std::vector<long>{1, 1, 1, 1, 1, 2, 4, 7, 10, 13, 16}));
  EXPECT_EQ(j["signature"]["tails"][2]["valid_until"], nullptr);
}

TEST(Cli, JsonIsDeterministic) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"table", data("conic_point.ideal"), "--json"},
           {"degenerate", data("twisted_cubic.ideal"), "--order", "lex", "--check-squarefree", "--json"},
           {"stratify", data("torsion_family.family"), "--json"},
           {"acm", data("skew_lines.ideal"), "--json"}}) {
    auto a = run(cmd), b = run(cmd);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, OutFile) {
  auto p = std::filesystem::temp_directory_path() / "fibfull_test_out.json";
  std::filesystem::remove(p);
  auto r = run({"betti", data("twisted_cubic.ideal"), "--json", "--out", p.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "betti");
}

TEST(Cli, Compare) {
  auto r = run({"compare", data("skew_lines.ideal"), data("conic_point.ideal")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "DIFFERENT (first divergence: i=0, nu=-1)"));
  r = run({"compare", data("twisted_cubic.ideal"), data("twisted_cubic.ideal")});
  EXPECT_TRUE(contains(r.out, "SAME STRATUM"));
  r = run({"compare", data("twisted_cubic.ideal"), data("twisted_cubic_f101.ideal")});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, AcmAg) {
  EXPECT_TRUE(contains(run({"acm", data("twisted_cubic.ideal")}).out, "ACM: true"));
  EXPECT_TRUE(contains(run({"acm", data("skew_lines.ideal")}).out, "ACM: false"));
  auto j = nlohmann::json::parse(run({"ag", data("twisted_cubic.ideal"), "--json"}).out);
  EXPECT_EQ(j["acm"], true);
  EXPECT_EQ(j["ag"], false);
  EXPECT_EQ(j["type"], 2);
  j = nlohmann::json::parse(run({"ag", data("complete_intersection.ideal"), "--json"}).out);
  EXPECT_EQ(j["ag"], true);
}

TEST(Cli, Betti) {
  auto r = run({"betti", data("twisted_cubic.ideal")});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "         0    1\n   2:    3    2\n"));
}

TEST(Cli, Lex) {
  auto r = run({"lex", "--partition", "2,1", "--r", "3", "--both"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "(x0, x1^2, x1*x2)"));
  EXPECT_EQ(run({"lex", "--partition", "4", "--r", "3"}).code, 1);
}

TEST(Cli, Degenerate) {
  auto r = run({"degenerate", data("twisted_cubic.ideal"), "--order", "lex", "--check-squarefree"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "weight 1,1,2,4"));
  EXPECT_TRUE(contains(r.out, "squarefree=true"));
  EXPECT_TRUE(contains(r.out, "equal=true"));
  r = run({"degenerate", data("minors_2x3.ideal"), "--check-squarefree", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["squarefree"], true);
  EXPECT_EQ(j["equal"], true);
}

TEST(Cli, StratifyAndFiberFull) {
  auto j = nlohmann::json::parse(run({"stratify", data("torsion_family.family"), "--json"}).out);
  ASSERT_EQ(j["strata"].size(), 2u);
  EXPECT_EQ(j["strata"][0]["locus"], "t");
  EXPECT_EQ(j["strata"][0]["h"]["1"], 1);
  EXPECT_EQ(j["strata"][1]["locus"], "generic");
  EXPECT_EQ(j["strata"][1]["h"]["1"], 0);

  auto r = run({"fiberfull-check", data("twisted_cubic.ideal"), "--homogenize", "lex", "--q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "q=1: true"));
  EXPECT_TRUE(contains(r.out, "q=2: true"));
  EXPECT_TRUE(contains(r.out, "fiber-full: true"));
  r = run({"fiberfull-check", data("torsion_family.family")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "family is not flat over k[t]"));
  EXPECT_TRUE(contains(r.out, "fiber-full: false"));
}

TEST(Cli, ErrorsExitOne) {
  EXPECT_EQ(run({"table", "/nonexistent/file.ideal"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"table", data("twisted_cubic.ideal"), "--window", "3", "1"}).code, 1);
  auto bad = scratch("bad.ideal", "ring x0..x2\nx0 + * x1\n");
  auto r = run({"table", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, ":2:")) << r.err;
  auto inhom = scratch("inhom.ideal", "ring x0..x2\nx0^2 + x1\n");
  EXPECT_EQ(run({"table", inhom.string()}).code, 1);
  auto with_t = scratch("t.ideal", "ring x0..x2\nt*x0\n");
  EXPECT_EQ(run({"table", with_t.string()}).code, 1);
}

TEST(Cli, FieldOverride) {
  auto q = run({"table", data("twisted_cubic.ideal"), "--window", "-3", "3", "--json"});
  auto p = run({"table", data("twisted_cubic.ideal"), "--window", "-3", "3", "--json", "--field", "101"});
  ASSERT_EQ(p.code, 0) << p.err;
  auto jq = nlohmann::json::parse(q.out), jp = nlohmann::json::parse(p.out);
  EXPECT_EQ(jq["signature"]["h"], jp["signature"]["h"]);
  EXPECT_EQ(jp["signature"]["field"], "F 101");
}

TEST(Input, RoundTripThroughPrinter) {
  auto f = fibfull::cli::read_input(data("conic_point.ideal"));
  auto I = f.ideal();
  std::ostringstream body;
  body << "ring x0..x3\n";
  for (const auto& g : I.generators()) body << g.to_string(fibfull::variable_names(4)) << "\n";
  auto p = scratch("roundtrip.ideal", body.str());
  auto J = fibfull::cli::read_input(p.string()).ideal();
  EXPECT_TRUE(fibfull::same_ideal(I, J));
}

TEST(Input, Intersect) {
  std::istringstream in("field F 7\nring x0..x1\nx0\nintersect\nx1\n");
  auto f = fibfull::cli::parse_input(in, "mem");
  auto I = f.ideal();
  EXPECT_EQ(I.generators().size(), 1u);
  EXPECT_EQ(I.field().characteristic(), 7u);
}

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "escalade/cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = escalade::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return (fs::path(CORPUS_DIR) / name).string(); }

Json json_of(const Result& r) { return Json::parse(r.out); }

}  // namespace

TEST(Cli, EnumerateCyclicZeroOne) {
  Result r = run({"enumerate", corpus("zero_one_cyclic.game"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json j = json_of(r);
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["equilibria"][0]["profile"], (Json{{"A", "a"}, {"B", "c"}}));
  EXPECT_EQ(j["equilibria"][1]["profile"], (Json{{"A", "c"}, {"B", "a"}}));
}

TEST(Cli, NeverBidIsRejected) {
  Result r = run({"check", corpus("dollar_auction_v100.game"), "--profile",
                  corpus("profiles/never_bid.profile")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation at alice (Alice): a gives 1-1*n, c gives 99-1*n from stage 2"),
            std::string::npos);
  Result j = run({"check", corpus("dollar_auction_v100.game"), "--profile",
                  corpus("profiles/never_bid.profile"), "--format", "json"});
  EXPECT_EQ(json_of(j)["equilibrium"], false);
  EXPECT_EQ(json_of(j)["violations"].size(), 3u);
}

TEST(Cli, OneSidedProfilesAccepted) {
  for (const char* p : {"alice_continues.profile", "bertrand_continues.profile"}) {
    Result r = run({"check", corpus("dollar_auction_v100.game"), "--profile", corpus("profiles/") + p});
    EXPECT_EQ(r.code, 0) << r.out;
  }
}

TEST(Cli, SolveZeroOneSeven) {
  Result r = run({"solve", corpus("zero_one_7.game"), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["outcome"], Json::array({1, 0}));
  Result t = run({"solve", corpus("zero_one_7.game")});
  EXPECT_NE(t.out.find("-> (1,0)"), std::string::npos);
}

TEST(Cli, SolveTies) {
  Result first = run({"solve", corpus("matching_pennies_seq.game"), "--format", "json"});
  Result last = run({"solve", corpus("matching_pennies_seq.game"), "--ties", "last", "--format", "json"});
  EXPECT_EQ(json_of(first)["play"], Json::array({"p", "f", "f"}));
  EXPECT_EQ(json_of(last)["play"], Json::array({"f", "p", "p"}));
  EXPECT_EQ(run({"solve", corpus("matching_pennies_seq.game"), "--ties", "middle"}).code, 2);
}

TEST(Cli, EnumerateMatchingPennies) {
  Json j = json_of(run({"enumerate", corpus("matching_pennies_seq.game"), "--format", "json"}));
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["distinct_play_lines"], 2);
  EXPECT_EQ(j["play_lines"], (Json{{"p", "f", "f"}, {"f", "p", "p"}}));
}

TEST(Cli, EnumerateCapExitsThree) {
  Result r = run({"enumerate", corpus("zero_one_7.game"), "--cap", "3", "--format", "json"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json_of(r)["truncated"], true);
  EXPECT_EQ(json_of(r)["count"], 3);
  EXPECT_EQ(run({"enumerate", corpus("zero_one_cyclic.game"), "--cap", "2"}).code, 3);
}

TEST(Cli, CheckCyclicProfiles) {
  EXPECT_EQ(run({"check", corpus("zero_one_cyclic.game"), "--profile", corpus("profiles/aa_bc.profile")}).code, 0);
  Result cc = run({"check", corpus("zero_one_cyclic.game"), "--profile", corpus("profiles/ac_bc.profile"),
                   "--format", "json"});
  EXPECT_EQ(cc.code, 1);
  EXPECT_EQ(json_of(cc)["divergent_from"], Json::array({"A", "B"}));
  EXPECT_EQ(json_of(cc)["violations"][0]["profile_value"], nullptr);
}

TEST(Cli, UnfoldReproducesCorpus) {
  Result r = run({"unfold", corpus("zero_one_cyclic.game"), "--depth", "7", "--terminal", "1,0"});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(corpus("zero_one_7.game"));
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(r.out, ss.str());
  EXPECT_EQ(run({"unfold", corpus("zero_one_cyclic.game"), "--depth", "3", "--terminal", "1;0"}).code, 2);
  EXPECT_EQ(run({"unfold", corpus("zero_one_7.game"), "--depth", "3", "--terminal", "1,0"}).code, 2);
}

TEST(Cli, AuctionReport) {
  Result r = run({"auction", "--value", "100", "--max-stage", "40", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  Json j = json_of(r);
  EXPECT_EQ(j["equilibria"].size(), 2u);
  EXPECT_EQ(j["never_bid"]["equilibrium"], false);
  EXPECT_EQ(j["truncation"]["agree"], true);
  EXPECT_EQ(j["truncation"]["profiles"].size(), 8u);
  EXPECT_EQ(run({"auction", "--value", "0"}).code, 2);
}

TEST(Cli, SimulateIsDeterministic) {
  std::vector<std::string> args = {"simulate", corpus("zero_one_cyclic.game"), "--horizon", "100",
                                   "--seed", "7", "--format", "json"};
  Result a = run(args);
  Result b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_of(a)["seed"], 7);
  // JSON mode refuses to run without an explicit seed.
  EXPECT_EQ(run({"simulate", corpus("zero_one_cyclic.game"), "--horizon", "10", "--format", "json"}).code, 2);
}

TEST(Cli, SimulateWritesTrace) {
  const fs::path out = fs::temp_directory_path() / "escalade_cli_trace.csv";
  Result r = run({"simulate", corpus("zero_one_cyclic.game"), "--horizon", "10", "--seed", "1",
                  "--policy", "fixed:1,1", "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "0,0,1,c\n1,1,1,a\nterminal,converged,1,0\n");
  EXPECT_NE(r.out.find("verdict: converged (1,0) after 2 moves"), std::string::npos);
  fs::remove(out);
  EXPECT_EQ(run({"simulate", corpus("zero_one_cyclic.game"), "--horizon", "10", "--policy", "fixed:5,0"}).code, 2);
  EXPECT_EQ(run({"simulate", corpus("zero_one_cyclic.game"), "--horizon", "10", "--policy", "odd"}).code, 2);
}

TEST(Cli, Matrix) {
  Json j = json_of(run({"matrix", corpus("rps.game"), "--format", "json"}));
  EXPECT_EQ(j["row"], Json::array({"1/3", "1/3", "1/3"}));
  EXPECT_EQ(j["value"], "1/2");
  EXPECT_EQ(j["certificate"]["holds"], true);
  EXPECT_EQ(run({"matrix", corpus("zero_one_cyclic.game")}).code, 2);
}

TEST(Cli, ExportDotAndText) {
  Result dot = run({"export", corpus("zero_one_cyclic.game"), "--profile", corpus("profiles/aa_bc.profile"), "--dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph game {", 0), 0u);
  EXPECT_EQ(run({"export", corpus("zero_one_cyclic.game"), "--dot"}).out,
            run({"export", corpus("zero_one_cyclic.game"), "--dot"}).out);
  Result text = run({"export", corpus("rps.game")});
  EXPECT_EQ(text.out.rfind("players Alice Bertrand\nmatrix sum=1 {", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", "/nonexistent.game"}).code, 2);
  EXPECT_EQ(run({"solve", corpus("rps.game"), "--format", "xml"}).code, 2);
  const fs::path bad = fs::temp_directory_path() / "escalade_bad.game";
  std::ofstream(bad) << "finite { leaf(0 1) }";
  Result r = run({"solve", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":1:17: expected"), std::string::npos);
  fs::remove(bad);
  Result help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("key = action"), std::string::npos);
}

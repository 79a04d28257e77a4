#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "bribery/cli.hpp"
#include "bribery/dispatch.hpp"
#include "bribery/io.hpp"
#include "support.hpp"

using namespace bribery;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "bribery");
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bribery-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    e1_ = path("e1.txt");
    write_file(e1_, "3 3\n0 1\n0\n1 2\n");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
  std::string e1_;
};

}  // namespace

TEST_F(CliTest, SolvePolyAndOracleAgree) {
  const std::vector<std::string> base = {"solve", "--instance", e1_, "--rule", "av", "--op", "appadd",
                                         "--k", "1", "--ell", "1", "--distinguished", "0"};
  auto with = [&](const std::string& algorithm) {
    auto args = base;
    args.insert(args.end(), {"--algorithm", algorithm});
    return run(args);
  };
  const CliRun poly = with("poly");
  ASSERT_EQ(poly.code, 0) << poly.err;
  const auto pj = nlohmann::json::parse(poly.out);
  EXPECT_EQ(pj["answer"], "yes");
  EXPECT_FALSE(pj["witness"].is_null());
  const CliRun oracle = with("oracle");
  EXPECT_EQ(oracle.code, 0);
  EXPECT_EQ(nlohmann::json::parse(oracle.out)["answer"], pj["answer"]);
  EXPECT_EQ(nlohmann::json::parse(oracle.out)["instance_digest"], pj["instance_digest"]);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"solve", "--instance", e1_, "--rule", "av", "--op", "appadd", "--k", "1", "--ell", "0",
                 "--distinguished", "0"})
                .code,
            1);
  const CliRun sav = run({"solve", "--instance", e1_, "--rule", "sav", "--op", "appadd", "--k", "1", "--ell", "1",
                       "--distinguished", "0", "--algorithm", "poly"});
  EXPECT_EQ(sav.code, 2);
  EXPECT_FALSE(sav.err.empty());
  EXPECT_EQ(run({"solve", "--instance", path("missing.txt"), "--rule", "av", "--op", "vc", "--k", "1", "--ell",
                 "1", "--distinguished", "0"})
                .code,
            2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST_F(CliTest, CapErrorsAreReported) {
  const CliRun r = run({"solve", "--instance", e1_, "--rule", "sav", "--op", "vc", "--k", "1", "--ell", "2",
                     "--distinguished", "0", "--algorithm", "oracle", "--script-cap", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("script"), std::string::npos);
}

TEST_F(CliTest, Winners) {
  const CliRun av = run({"winners", "--instance", e1_, "--rule", "av", "--k", "1"});
  ASSERT_EQ(av.code, 0) << av.err;
  const auto j = nlohmann::json::parse(av.out);
  EXPECT_EQ(j["committees"], nlohmann::json::parse("[[0],[1]]"));
  EXPECT_EQ(j["score"], "2/1");
  const auto sav = nlohmann::json::parse(run({"winners", "--instance", e1_, "--rule", "sav", "--k", "1"}).out);
  EXPECT_EQ(sav["committees"], nlohmann::json::parse("[[0]]"));
  EXPECT_EQ(sav["score"], "3/2");
  const auto pav = nlohmann::json::parse(run({"winners", "--instance", e1_, "--rule", "pav", "--k", "3"}).out);
  EXPECT_EQ(pav["committees"], nlohmann::json::parse("[[0,1,2]]"));
}

TEST_F(CliTest, Verify) {
  write_file(path("empty.json"), R"({"operation":"vc","edits":[]})");
  write_file(path("big.json"),
             R"({"operation":"vc","edits":[{"vote":0,"ballot":[2]},{"vote":1,"ballot":[2]}]})");
  const std::vector<std::string> flags = {"--instance", e1_, "--rule", "av", "--op", "vc", "--k", "1",
                                          "--ell", "1", "--r", "3"};
  auto verify = [&](const std::string& script, const std::string& j) {
    std::vector<std::string> args = {"verify", "--script", path(script), "--distinguished", j};
    args.insert(args.end(), flags.begin(), flags.end());
    return run(args);
  };
  EXPECT_EQ(verify("empty.json", "2").code, 0);
  const CliRun not_excluded = verify("empty.json", "0");
  EXPECT_EQ(not_excluded.code, 1);
  EXPECT_NE(not_excluded.out.find("winners"), std::string::npos);
  const CliRun over = verify("big.json", "0");
  EXPECT_EQ(over.code, 1);
  EXPECT_NE(over.out.find("budget"), std::string::npos);
}

TEST_F(CliTest, GadgetCounts) {
  write_file(path("c5.txt"), "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  const CliRun nwd = run({"gadget", "--kind", "nwd-ccav", "--graph", path("c5.txt"), "--kappa", "2", "-o", path("nwd")});
  ASSERT_EQ(nwd.code, 0) << nwd.err;
  const Election e = parse_election(read_file(path("nwd/instance.txt")));
  EXPECT_EQ(e.candidate_count(), 6);
  EXPECT_EQ(e.vote_count(), 6);
  EXPECT_TRUE(fs::exists(path("nwd/params.json")));
  EXPECT_TRUE(fs::exists(path("nwd/script.json")));

  write_file(path("t.txt"), "1\n0 1 2\n0 1 2\n0 1 2\n");
  const CliRun vdc = run({"gadget", "--kind", "vdc-av-rx3c", "--rx3c", path("t.txt"), "-o", path("vdc")});
  ASSERT_EQ(vdc.code, 0) << vdc.err;
  const Election v = parse_election(read_file(path("vdc/instance.txt")));
  EXPECT_EQ(v.candidate_count(), 4);
  EXPECT_EQ(v.vote_count(), 6);

  // The planted script verifies against the generated files.
  const CliRun check = run({"verify", "--instance", path("vdc/instance.txt"), "--params", path("vdc/params.json"),
                         "--script", path("vdc/script.json")});
  EXPECT_EQ(check.code, 0) << check.out << check.err;

  write_file(path("odd.txt"), "1\n0 1 2\n0 1 2\n0 1 2\n");
  EXPECT_EQ(run({"gadget", "--kind", "appadd-sav-rx3c", "--rx3c", path("odd.txt"), "-o", path("odd")}).code, 2);
}

TEST_F(CliTest, BenchIsDeterministic) {
  write_file(path("suite.json"), R"({"algorithms":["oracle","ilp-m"],
    "instances":[{"file":"e1.txt","rule":"av","operation":"vc","k":1,"ell":1,"r":1,"distinguished":[0]}],
    "random":{"count":20,"seed":3,"m":[2,3],"n":[1,4]}})");
  const CliRun a = run({"bench", "--suite", path("suite.json")});
  const CliRun b = run({"bench", "--suite", path("suite.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1 + 21 * 2);
  EXPECT_EQ(a.out.find("false"), std::string::npos);
  const CliRun c = run({"bench", "--suite", path("suite.json"), "--seed", "4"});
  EXPECT_NE(a.out, c.out);

  write_file(path("empty.json"), "{}");
  const CliRun empty = run({"bench", "--suite", path("empty.json")});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(std::count(empty.out.begin(), empty.out.end(), '\n'), 1);
}

TEST(Dispatch, EveryApplicableAlgorithmAgrees) {
  std::mt19937_64 rng(55);
  RandomSpec spec;
  spec.m_max = 4;
  spec.ell_max = 3;
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng, spec);
    if (trial % 3 == 0) inst.distance = 2 * inst.election.candidate_count();
    std::optional<bool> answer;
    for (Algorithm a : {Algorithm::kAuto, Algorithm::kOracle, Algorithm::kPoly, Algorithm::kIlpM, Algorithm::kIlpJ,
                        Algorithm::kFlow, Algorithm::kEnum}) {
      if (inapplicable_reason(a, inst)) {
        EXPECT_THROW(run_algorithm(a, inst), std::invalid_argument);
        continue;
      }
      const Decision d = run_algorithm(a, inst);
      if (!answer) answer = d.answer;
      EXPECT_EQ(d.answer, *answer) << to_string(a) << " trial " << trial;
    }
  }
}

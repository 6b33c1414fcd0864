#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "abelsub/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = abelsub::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Gen) {
  EXPECT_EQ(run({"gen", "fib", "--length", "8"}).out, "01001010\n");
  EXPECT_EQ(run({"gen", "tm", "--length", "8"}).out, "01101001\n");
}

TEST(Cli, AnalyzeCorridor) {
  const CliRun r = run({"analyze", "periodic:01", "--what", "corridor", "--window", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n\tmin\tmax\n1\t0\t1\n2\t1\t1\n3\t1\t2\n4\t2\t2\n");
  const CliRun j = run({"analyze", "periodic:01", "--what", "corridor", "--window", "4", "--format", "json"});
  const auto doc = abelsub::report::json::parse(j.out);
  EXPECT_EQ(doc["schema"], "abelsub/1");
  EXPECT_EQ(doc["rows"][2], abelsub::report::json::parse("[3,1,2]"));
}

TEST(Cli, AnalyzeOthers) {
  EXPECT_NE(run({"analyze", "fib", "--what", "abelian-complexity", "--window", "5"}).out.find("5\t2"), std::string::npos);
  EXPECT_NE(run({"analyze", "fib", "--what", "complexity", "--window", "5"}).out.find("5\t6"), std::string::npos);
  EXPECT_NE(run({"analyze", "tm", "--what", "balance", "--window", "8"}).out.find("balance_coefficient\t2"),
            std::string::npos);
  EXPECT_NE(run({"analyze", "fib", "--what", "rauzy:2", "--window", "4", "--format", "dot"}).out.find("digraph"),
            std::string::npos);
  EXPECT_EQ(run({"analyze", "fib", "--what", "graph", "--window", "3"}).out, "i\tg\n0\t0\n1\t0\n2\t1\n3\t1\n");
  EXPECT_EQ(run({"analyze", "fib", "--what", "frequency", "--window", "4"}).code, 0);
  EXPECT_EQ(run({"analyze", "fib", "--what", "nothing", "--window", "4"}).code, 2);
}

TEST(Cli, Transform) {
  EXPECT_EQ(run({"transform", "periodic:11000", "--op", "F", "--length", "10"}).out, "0100101001\n");
  EXPECT_EQ(run({"transform", "periodic:10", "--op", "T", "--length", "4"}).out, "0101\n");
  EXPECT_EQ(run({"transform", "periodic:0011", "--op", "morph:0->100001,1->010", "--length", "18"}).out,
            "100001100001010010\n");
  EXPECT_EQ(run({"transform", "fib", "--op", "flip-family:3:0", "--length", "8"}).out, "01001010\n");
  EXPECT_EQ(run({"transform", "periodic:11000", "--op", "squeeze", "--alpha", "2/5", "--C", "1/10", "--length", "5"}).out,
            "10100\n");
  EXPECT_EQ(run({"transform", "fib", "--op", "squeeze", "--length", "5"}).code, 2);  // no --C
  EXPECT_EQ(run({"transform", "tm", "--op", "flip-family:3:01", "--length", "5"}).code, 2);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run({"verify", "isolation", "--seed", "5"});
  const CliRun b = run({"verify", "isolation", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "traffic-membership", "--spec", "fib", "--window", "256"}).out.rfind("traffic-membership: pass", 0),
            0u);
  EXPECT_EQ(run({"verify", "preimage-nⁿ"}).code, 0);
  EXPECT_EQ(run({"verify", "no-such-lemma"}).code, 2);
}

TEST(Cli, VerifyReportsRefutation) {
  // The squeeze suite against a spec whose frequency is not known exactly is a
  // configuration error; a balanced spec in family-distinct fails.
  EXPECT_EQ(run({"verify", "squeeze-membership", "--spec", "file:/nonexistent"}).code, 2);
  EXPECT_EQ(run({"verify", "family-distinct", "--spec", "fib"}).code, 1);
}

TEST(Cli, Family) {
  const CliRun r = run({"family", "default", "--depth", "2", "--window", "20000", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = abelsub::report::json::parse(r.out);
  EXPECT_TRUE(doc["distinctness"]["all_distinct"].get<bool>());
  EXPECT_EQ(doc["stages"].size(), 3u);
}

TEST(Cli, ErrorsAndExitCodes) {
  const CliRun bad = run({"gen", "bogus:1", "--length", "3", "--json-errors"});
  EXPECT_EQ(bad.code, 2);
  const auto doc = abelsub::report::json::parse(bad.err);
  EXPECT_EQ(doc["kind"], "error");
  EXPECT_EQ(doc["category"], "config");
  EXPECT_EQ(run({"gen", "fib"}).code, 2);
  EXPECT_EQ(run({"analyze", "fib", "--what", "corridor", "--window", "10", "--sample", "5"}).code, 2);
  EXPECT_EQ(run({"gen", "rot:1/2:0", "--length", "3"}).code, 2);
}

TEST(Cli, ResourceCapFromEnvironment) {
  ::setenv("ABELSUB_STATE_CAP", "10", 1);
  const CliRun r = run({"verify", "periodic-closure"});
  ::unsetenv("ABELSUB_STATE_CAP");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"verify", "periodic-closure"}).code, 0);
}

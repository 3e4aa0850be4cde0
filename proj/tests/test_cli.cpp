#include <gtest/gtest.h>

#include <sstream>

#include "betashift/catalog.hpp"
#include "betashift/cli.hpp"
#include "betashift/json_io.hpp"

using namespace betashift;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  Result r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, CompareEquivalent) {
  Result r = run({"compare", "(110)", "(20)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("outcome: Equivalent"), std::string::npos);
  EXPECT_EQ(run_json({"compare", "(110)", "(20)"}).at("outcome"), "Equivalent");
}

TEST(Cli, CompareUnknown) {
  EXPECT_EQ(run_json({"compare", "1(110)", "11(110)"}).at("outcome"), "Unknown");
}

TEST(Cli, Invariants) {
  Json j = run_json({"invariants", "11(110)"});
  EXPECT_EQ(j.at("S"), 2);
  EXPECT_EQ(j.at("bf_fischer").at("group"), "Z/2");
  EXPECT_EQ(j.at("bf_fischer").at("sign"), "-");
  EXPECT_EQ(j.at("bf_fiber").at("group"), "Z/2 + Z^2");
  Result text = run({"invariants", "11(110)"});
  EXPECT_NE(text.out.find("BF(A_P): Z/2 + Z^2"), std::string::npos);
}

TEST(Cli, Expand) {
  Result r = run({"expand", "--poly", "x^2-x-1", "--interval", "3/2,7/4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "digits: 11\nstatus: Finite{2}\n");
  Json g = run_json({"genseq", "--poly", "x^3-x^2-x-1", "--interval", "1.8,1.875"});
  EXPECT_EQ(g.at("g"), "(110)");
  EXPECT_EQ(run_json({"genseq", "--beta", "3"}).at("g"), "(2)");
  Result t = run({"--max-digits", "10", "expand", "--beta", "5/2"});
  EXPECT_NE(t.out.find("Truncated{10}"), std::string::npos);
}

TEST(Cli, Beta) {
  Json j = run_json({"--precision", "1/10000000000", "beta", "(10)"});
  EXPECT_EQ(j.at("polynomial"), "x^2-x-1");
  EXPECT_EQ(j.at("approx").get<std::string>().substr(0, 10), "1.61803398");
}

TEST(Cli, CoverAndDot) {
  Json j = run_json({"cover", "11(10)", "--multiplicity", "4"});
  EXPECT_EQ(j.at("edges").size(), 7u);
  EXPECT_EQ(j.at("multiplicity").at("max_preimages"), 2);
  Result dot = run({"--format", "dot", "cover", "1(10)"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(run({"--format", "dot", "compare", "(10)", "(1)"}).code, cli::kExitUsage);
  EXPECT_EQ(run_json({"cover", "11(10)", "--depth", "4"}).at("edges").size(), 6u);
}

TEST(Cli, FiberAndReduce) {
  Json f = run_json({"fiber", "1(10)"});
  EXPECT_EQ(f.at("vertices").size(), 7u);
  Json r = run_json({"reduce", "11(110)"});
  EXPECT_EQ(r.at("graph").at("vertices").size(), 6u);
  EXPECT_EQ(r.at("bf_preserved"), true);
  Json steps = run_json({"--emit-steps", "reduce", "11(110)"});
  EXPECT_EQ(steps.at("steps").size(), steps.at("log").size());
  Result dots = run({"--format", "dot", "--emit-steps", "reduce", "1(10)"});
  EXPECT_GT(std::count(dots.out.begin(), dots.out.end(), '{'), 1);
}

TEST(Cli, CanonicalAndEquivariant) {
  Json c = run_json({"canonical", "1101101(0101100)"});
  EXPECT_EQ(c.at("form"), "11(1011000)");
  Json e = run_json({"equivariant", "1(110)", "11(110)"});
  EXPECT_EQ(e.at("equivalent"), true);
  EXPECT_EQ(e.at("reduced_isomorphic"), true);
}

TEST(Cli, OracleCheckEmptyOnCatalog) {
  for (const GeneratingSequence& g : standard_catalog()) {
    Result r = run({"oracle-check", g.to_string(), "--len", "8"});
    EXPECT_EQ(r.code, 0) << g.to_string() << r.out;
    EXPECT_EQ(r.out, "");
  }
}

TEST(Cli, Batch) {
  Result r = run({"compare", "--batch", BETASHIFT_TEST_DATA "/pairs.txt"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "(110) (20) Equivalent\n1(110) 11(110) Unknown\n11(10) 11(110) Distinct\n"
            "11(10) 1(10) Equivalent\n");
  Json j = run_json({"compare", "--batch", BETASHIFT_TEST_DATA "/pairs.txt"});
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[2].at("pair"), Json({"11(10)", "11(110)"}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  Result bad = run({"cover", "11"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("word(period)"), std::string::npos);
  Result domain = run({"cover", "(01)"});
  EXPECT_EQ(domain.code, cli::kExitDomain);
  EXPECT_EQ(domain.err.rfind("error: ", 0), 0u);
  EXPECT_EQ(run({"reduce", "(10)"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"expand", "--poly", "x^2-x-1", "--interval", "2,3"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"expand"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "cover", "(1)"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

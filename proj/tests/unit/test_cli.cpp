#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = covering::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

const std::string kErdos5 = "0 2\n0 3\n1 4\n5 6\n7 12\n";

}  // namespace

TEST(Cli, VerifyCovering) {
  const auto r = run({"verify", "--input", "-"}, kErdos5);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "covers: true, method: scan, lcm: 12");
}

TEST(Cli, VerifyNonCoveringExitsOne) {
  const auto r = run({"verify", "--input", "-", "--at", "7"}, "0 2\n0 3\n1 4\n5 6\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "witness: 7"));
  EXPECT_TRUE(contains(r.out, "multiplicity at 7: 0"));
}

TEST(Cli, VerifyMethods) {
  for (const std::string m : {"scan", "ie", "split", "auto"}) {
    const auto r = run({"verify", "--input", "-", "--method", m}, kErdos5);
    EXPECT_EQ(r.code, 0) << m;
    EXPECT_TRUE(contains(r.out, "covers: true")) << m;
  }
}

TEST(Cli, Density) {
  const auto r = run({"density", "--input", "-"}, "0 2\n0 3\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "density: 2/3"));
}

TEST(Cli, Witness) {
  EXPECT_EQ(run({"witness", "--input", "-"}, "0 2\n0 3\n").code, 0);
  EXPECT_TRUE(contains(run({"witness", "--input", "-"}, "0 2\n0 3\n").out, "witness: 1"));
  EXPECT_EQ(run({"witness", "--input", "-"}, kErdos5).code, 1);
  EXPECT_EQ(run({"witness", "--input", "-", "--method", "ie"}, kErdos5).code, 2);
}

TEST(Cli, ParseErrorNamesLine) {
  const auto r = run({"verify", "--input", "-"}, "0 2\n1 2 3\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "<stdin>: line 2")) << r.err;
}

TEST(Cli, MissingFile) {
  EXPECT_EQ(run({"verify", "--input", "/nonexistent/sys.txt"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", "-", "--method", "magic"}).code, 2);
}

TEST(Cli, ScanCapacityIsUsageError) {
  const auto r = run({"verify", "--input", "-", "--method", "scan"}, "0 2\n1 4294967311\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "split"));
}

TEST(Cli, BoundTable) {
  const auto r = run({"bound-table", "--from", "21", "--to", "22", "--tsv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "21\t95237487894517051871/47728278108474163200\t1.995410"));
  EXPECT_TRUE(contains(r.out, "22\t547079112890264916629/270460242614686924800"));
  const auto profile = run({"bound-table", "--r", "9"});
  EXPECT_EQ(profile.code, 0);
  EXPECT_TRUE(contains(profile.out, "1/22"));
}

TEST(Cli, Bff) {
  EXPECT_EQ(run({"bff", "--variant", "squarefree", "--first", "11"}).code, 0);
  EXPECT_EQ(run({"bff", "--variant", "squarefree", "--first", "10"}).code, 1);
  const auto odd = run({"bff", "--variant", "odd", "--primes", "3,5,7"});
  EXPECT_EQ(odd.code, 1);
  EXPECT_TRUE(contains(odd.out, "5/3"));
  const auto scan = run({"bff", "--variant", "squarefree", "--from", "1", "--to", "15"});
  EXPECT_TRUE(contains(scan.out, ": 11")) << scan.out;
}

TEST(Cli, ExpandCheck) {
  const auto r = run({"expand-check", "--from", "1", "--to", "8", "--points", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "r=8 "));
  EXPECT_TRUE(contains(r.out, "eval_mismatches=0/5"));
}

TEST(Cli, Search) {
  const auto r = run({"search", "--pool-lcm", "12", "--distinct"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "# status: found"));
  const auto none = run({"search", "--pool", "3,5,15", "--distinct"});
  EXPECT_EQ(none.code, 1);
  EXPECT_TRUE(contains(none.out, "# status: none"));
}

TEST(Cli, SearchOutputFeedsVerify) {
  const auto found = run({"search", "--pool-lcm", "36", "--max-classes", "6"});
  ASSERT_EQ(found.code, 0);
  EXPECT_EQ(run({"verify", "--input", "-"}, found.out).code, 0);
}

TEST(Cli, ScanNonexistence) {
  const auto r = run({"scan-nonexistence", "--from", "1", "--to", "200"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "found: 0"));
  EXPECT_TRUE(contains(r.out, "finite evidence only"));
}

TEST(Cli, Examples) {
  const auto r = run({"examples", "--name", "erdos5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kErdos5);
  EXPECT_TRUE(contains(run({"examples", "--list"}).out, "erdos14"));
  EXPECT_EQ(run({"examples", "--name", "nope"}).code, 2);
}

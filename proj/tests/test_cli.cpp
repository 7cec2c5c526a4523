#include <gtest/gtest.h>

#include <sstream>

#include "nearring/cli.hpp"

using nearring::run_command;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Cli, MemberTrue) {
  const CliRun r = run({"member", "--basis", "x2", "2x^10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "MEMBER true")) << r.out;
}

TEST(Cli, MemberFalseListsConditions) {
  const CliRun r = run({"member", "--basis", "x2", "x^10", "--format", "machine"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "MEMBER false\nCOND div idx=10 need=2|c got=1\n");
}

TEST(Cli, NegativePolynomialAfterSeparator) {
  const CliRun r = run({"member", "--basis", "1,x,x2,x3", "--format", "machine", "--", "-3x^3+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "MEMBER true\n");
}

TEST(Cli, Compose) {
  const CliRun r = run({"compose", "x^2+2", "2x^3-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4x^6 - 4x^3 + 3\n");
}

TEST(Cli, CompareEqual) {
  const CliRun r = run({"compare", "--basis", "x2,x3", "--degree-cap", "13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "RESULT compare PASS (equal)")) << r.out;
}

TEST(Cli, CompareContainedButNotEqual) {
  const CliRun r = run({"compare", "--basis", "x2,x3", "--degree-cap", "13", "--work-degree", "13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "MISSING x^13")) << r.out;
  EXPECT_TRUE(has_line(r.out, "RESULT compare PASS (contained, not equal)")) << r.out;
}

TEST(Cli, ParityCheck) {
  const CliRun r = run({"check", "theorem-4.1", "--j", "2", "--degree-cap", "16"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "RESULT check PASS")) << r.out;
  EXPECT_NE(r.out.find("target=x^6"), std::string::npos);
}

TEST(Cli, SingleAcceptanceCheck) {
  const CliRun r = run({"check", "separation"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("CHECK 1 separation PASS", 0), 0u) << r.out;
}

TEST(Cli, ClosureDump) {
  const CliRun r = run({"closure", "--gen", "x^2", "--degree-cap", "8", "--format", "machine", "--contains", "2x^6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "HNF D=8 rows=4\n"
            "0 0 1 0 0 0 0 0 0\n"
            "0 0 0 0 1 0 0 0 0\n"
            "0 0 0 0 0 0 2 0 0\n"
            "0 0 0 0 0 0 0 0 1\n"
            "ROUNDS 4 FIXPOINT yes\n"
            "CONTAINS 2x^6 true\n"
            "RESULT closure PASS\n");
}

TEST(Cli, WitnessFoundAndNotFound) {
  const CliRun yes = run({"witness", "--basis", "x2,x3", "2x^5"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(has_line(yes.out, "RESULT witness PASS"));
  const CliRun no = run({"witness", "--gen", "x^2", "--gen", "x^3", "x^5"});
  EXPECT_EQ(no.code, 1);
  EXPECT_TRUE(has_line(no.out, "WITNESS none"));
}

TEST(Cli, WitnessOutputVerifies) {
  const CliRun w = run({"witness", "--basis", "x2,x3", "--format", "machine", "x^7"});
  ASSERT_EQ(w.code, 0);
  const std::string prefix = "WITNESS ";
  ASSERT_EQ(w.out.rfind(prefix, 0), 0u);
  const std::string term = w.out.substr(prefix.size(), w.out.find('\n') - prefix.size());
  const CliRun v = run({"verify", "--gen", "x^2", "--gen", "x^3", "--term", term, "x^7"});
  EXPECT_EQ(v.code, 0) << v.out;
}

TEST(Cli, VerifyBuiltinsAndTerms) {
  const CliRun b = run({"verify", "--builtin", "--format", "machine"});
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(has_line(b.out, "VERIFY x2-2x10 PASS"));
  const CliRun ok = run({"verify", "--basis", "x2", "--term", "(comp g0 g0)", "x^4"});
  EXPECT_EQ(ok.code, 0);
  const CliRun bad = run({"verify", "--basis", "x2", "--term", "(comp g0 g0)", "x^5"});
  EXPECT_EQ(bad.code, 1);
  const CliRun unbound = run({"verify", "--basis", "x2", "--term", "g1", "x^3"});
  EXPECT_EQ(unbound.code, 1);
}

TEST(Cli, UsageErrorsExitTwo) {
  const CliRun bad_poly = run({"member", "--basis", "x2", "2x^^3"});
  EXPECT_EQ(bad_poly.code, 2);
  EXPECT_NE(bad_poly.err.find("grammar:"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"member", "--basis", "x7", "x"}).code, 2);
  EXPECT_EQ(run({"compare", "--basis", "x2", "--coeff-cap", "0"}).code, 2);
  EXPECT_EQ(run({"closure", "--gen", "x^2", "--degree-cap", "8", "--work-degree", "4"}).code, 2);
  EXPECT_EQ(run({"closure", "--degree-cap", "8"}).code, 2);
  EXPECT_EQ(run({"member", "--basis", "x2", "x", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"check", "no-such-check"}).code, 2);
  EXPECT_EQ(run({"verify", "--basis", "x2", "--term", "(add g0", "x"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("member"), std::string::npos);
}

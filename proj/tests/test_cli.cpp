#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fillscope/cli.hpp"
#include "fillscope/error.hpp"

using namespace fillscope;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fillscope");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, OrderExample) {
  CliRun r = cli({"order", "fig8", "--kill", "t^-1*(a^2*t*a)*t^2*(a^2*t*a)^-1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "336\n");
  EXPECT_EQ(cli({"order", "trefoil", "--kill", "x^-1*y^2"}).out, "1\n");
  EXPECT_EQ(cli({"order", "trefoil", "--slope", "3/1"}).out, "24\n");
}

TEST(Cli, OrderUnknownExitsThree) {
  CliRun r = cli({"order", "fig8", "--coset-budget", "1000"});
  EXPECT_EQ(r.code, kExitUnknown);
  EXPECT_EQ(r.out.rfind("unknown", 0), 0u);
}

TEST(Cli, Homology) {
  EXPECT_EQ(cli({"homology", "fig8", "--slope", "3/1"}).out, "Z/3\n");
  EXPECT_EQ(cli({"homology", "fig8", "--slope", "0/1"}).out, "Z\n");
  EXPECT_EQ(cli({"homology", "fig8"}).out, "Z\n");
}

TEST(Cli, InputErrors) {
  for (std::vector<std::string> args : {std::vector<std::string>{"order", "nosuchknot"},
                                        {"fill", "fig8", "2/4"},
                                        {"order", "fig8", "--kill", "q"},
                                        {"bs-candidate", "fig8", "--y", "a", "--m", "1"},
                                        {"frobnicate"},
                                        {"scan", "fig8", "--element", "t", "--window", "x"}}) {
    CliRun r = cli(args);
    EXPECT_EQ(r.code, kExitInputError) << args[0];
    EXPECT_EQ(r.err.rfind("error:", 0), 0u) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, PresentAndFill) {
  CliRun r = cli({"present", "fig8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("meridian = t"), std::string::npos);
  r = cli({"fill", "trefoil", "2/1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '<');
}

TEST(Cli, TraceAndCandidate) {
  CliRun r = cli({"trace", "fig8", "t^-1*(a^2*t*a)*t^2*(a^2*t*a)^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("NonPeripheral"), std::string::npos);
  r = cli({"bs-candidate", "fig8", "--y", "a", "--m", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t^-2"), std::string::npos);
  EXPECT_EQ(cli({"trace", "trefoil", "x"}).code, kExitInputError);
}

TEST(Cli, ScanAndVerify) {
  auto dir = std::filesystem::temp_directory_path() / "fillscope_cli_scan";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::string rep = (dir / "t.report").string();
  CliRun r = cli({"scan", "trefoil", "--element", "x^4", "--window", "3,1", "--out", rep, "--jobs", "2"});
  // Negative slopes give infinite groups, so some verdicts stay Unknown.
  EXPECT_EQ(r.code, kExitUnknown) << r.err;
  EXPECT_NE(r.out.find("fillscope-report 1"), std::string::npos);
  CliRun v = cli({"verify", rep});
  EXPECT_EQ(v.code, 0) << v.out;
  CliRun i = cli({"combine", "--intersect", rep, rep});
  EXPECT_EQ(i.code, 0);
  CliRun c = cli({"combine", "trefoil", "x", "y", "--m", "2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "x^2*y\n");
  CliRun bad = cli({"verify", (dir / "none").string()});
  EXPECT_EQ(bad.code, kExitCheckFailed);
}

TEST(Cli, BudgetScale) {
  EXPECT_EQ(budget_scale_from(std::nullopt), 1.0);
  EXPECT_EQ(budget_scale_from("3"), 3.0);
  EXPECT_EQ(budget_scale_from("0.5"), 0.5);
  EXPECT_EQ(budget_scale_from("1/4"), 0.25);
  EXPECT_THROW(budget_scale_from("-1"), Error);
  EXPECT_THROW(budget_scale_from("abc"), Error);
  EXPECT_THROW(budget_scale_from("1/0"), Error);
}

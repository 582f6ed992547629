#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpvi/cli.hpp"
#include "json.hpp"

using namespace cpvi;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, NoArgumentsIsUsageError) {
  auto r = run({});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("verify"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(Cli, UnknownSuiteIsUsageError) { EXPECT_EQ(run({"verify", "nonsense"}).code, kExitUsage); }

TEST(Cli, UnknownFlagIsUsageError) { EXPECT_EQ(run({"verify", "coxeter", "--frobnicate"}).code, kExitUsage); }

TEST(Cli, VerifyCoxeterJson) {
  auto r = run({"verify", "coxeter", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "coxeter");
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["summary"]["total"], 15);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["checks"][0]["check_id"], "coxeter.s0s1");
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("method"));
    EXPECT_TRUE(c.contains("elapsed_ms"));
  }
}

TEST(Cli, JsonIsStableApartFromTimings) {
  auto strip = [](std::string s) {
    auto j = nlohmann::json::parse(s);
    for (auto& c : j["checks"]) c.erase("elapsed_ms");
    return j.dump();
  };
  auto a = run({"verify", "holomorphy", "--json"});
  auto b = run({"--json", "verify", "holomorphy"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(Cli, TextReportHasSummaryLine) {
  auto r = run({"verify", "holomorphy"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("[pass-mod-relation] chart.r2.polynomial"), std::string::npos);
  EXPECT_NE(r.out.find("holomorphy: 17 checks"), std::string::npos);
}

TEST(Cli, DumpHamiltonianIsByteStable) {
  auto a = run({"dump", "hamiltonian"});
  auto b = run({"--dump-hamiltonian"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, run({"dump", "hamiltonian"}).out);
  EXPECT_EQ(a.out.rfind("x^2*y^3 - 2*x^2*y^2*t", 0), 0u);
}

TEST(Cli, DumpChartAndPipeline) {
  EXPECT_EQ(run({"dump", "chart", "4"}).out, run({"--dump-chart", "4"}).out);
  EXPECT_EQ(run({"dump", "chart", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"dump", "chart", "two"}).code, kExitUsage);
  auto p = run({"dump", "pipeline", "k2"});
  ASSERT_EQ(p.code, kExitOk);
  EXPECT_EQ(p.out, run({"--dump-pipeline", "k2"}).out);
  EXPECT_EQ(run({"dump", "pipeline", "k3"}).code, kExitUsage);
  auto j = nlohmann::json::parse(run({"dump", "pipeline", "k1", "--json"}).out);
  EXPECT_EQ(j["pipeline"], "k1");
  EXPECT_EQ(j["target_beta"].size(), 5u);
}

TEST(Cli, AlphaOffTheRelationIsUsageError) {
  auto r = run({"integrate", "--alpha", "0,0,0,0,0", "--init", "1/10,1/10,1/10,1/10", "--span", "3/10,6/10"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("a0 + 2a1"), std::string::npos);
}

TEST(Cli, AlphaMustBeExact) {
  EXPECT_EQ(run({"integrate", "--alpha", "1.0,0,0,0,0", "--init", "0,0,0,0", "--span", "0.3,0.6"}).code, kExitUsage);
}

TEST(Cli, SpanThroughSingularityIsUsageError) {
  EXPECT_EQ(run({"integrate", "--alpha", "1,0,0,0,0", "--init", "0.1,0.1,0.1,0.1", "--span", "0.3,1.5"}).code,
            kExitUsage);
}

TEST(Cli, IntegrateWritesCsvAndSvg) {
  auto dir = std::filesystem::temp_directory_path();
  auto csv = (dir / "cpvi_cli_test.csv").string();
  auto svg = (dir / "cpvi_cli_test.svg").string();
  auto r = run({"integrate", "--alpha", "1/2,1/10,1/10,0,0", "--init", "0.1,-0.1,0.05,0.1", "--span", "0.3,0.6",
                "--csv", csv, "--plot", svg, "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["t_end"].get<double>(), 0.6);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "t,x,y,z,w");
  std::ifstream g(svg);
  std::stringstream ss;
  ss << g.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);
}

TEST(Cli, BlowUpIsCheckFailure) {
  auto r = run({"integrate", "--alpha", "1,0,0,0,0", "--init", "5,5,5,5", "--span", "0.3,0.9"});
  EXPECT_EQ(r.code, kExitCheckFailed) << r.out << r.err;
}

TEST(Cli, OversizedAnsatzIsUsageError) {
  EXPECT_EQ(run({"verify", "integrals", "--deg-phase", "30", "--deg-t", "30"}).code, kExitUsage);
}

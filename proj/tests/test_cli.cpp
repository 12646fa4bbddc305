#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "support.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "heawood_cert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = heawood::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST(Cli, AllInMachineFormatVerifiesEverything) {
  const CliRun r = run({"all", "--format", "machine"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = heawood::Json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 16u);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "VERIFIED");
}

TEST(Cli, MachineOutputIsByteStable) {
  EXPECT_EQ(run({"classify", "--format", "machine"}).out, run({"classify", "--format", "machine"}).out);
}

TEST(Cli, ClassifyPrintsTheSevenGroups) {
  const CliRun r = run({"classify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Realizable groups: {trivial, Z2, Z3, Z6, Z7, D3, D7}"), std::string::npos);
}

TEST(Cli, SingleCheck) {
  const CliRun r = run({"check", "K12", "--format", "machine"});
  EXPECT_EQ(r.code, 0);
  const auto j = heawood::Json::parse(r.out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["witnesses"]["value"], "30/12");
  EXPECT_EQ(run({"check", "all"}).code, 0);
}

TEST(Cli, DumpCyclesListsOneCyclePerLine) {
  EXPECT_EQ(line_count(run({"dump", "cycles", "--length", "12"}).out), 56u);
  EXPECT_EQ(line_count(run({"dump", "cycles", "--length", "6"}).out), 28u);
  EXPECT_EQ(line_count(run({"dump", "cycles", "--length", "5"}).out), 0u);
  const auto j = heawood::Json::parse(run({"dump", "cycles", "--length", "14", "--format", "machine"}).out);
  EXPECT_EQ(j["count"], 24);
  const std::string derived = run({"--labeling", "derived12", "dump", "cycles", "--length", "12"}).out;
  EXPECT_NE(derived.find('v'), std::string::npos);
}

TEST(Cli, DumpGroupAndGraph) {
  const auto j = heawood::Json::parse(run({"dump", "group", "--spectrum", "--format", "machine"}).out);
  EXPECT_EQ(j["order"], 336);
  EXPECT_EQ(j["spectrum"]["8"], 84);
  EXPECT_FALSE(j.contains("subgroups"));
  const auto c = heawood::Json::parse(run({"dump", "group", "--conjugacy", "--format", "machine"}).out);
  EXPECT_EQ(c["conjugacy_classes"].size(), 9u);
  const auto s = heawood::Json::parse(run({"dump", "group", "--subgroups", "--format", "machine"}).out);
  EXPECT_EQ(s["subgroup_types"].size(), 19u);  // trivial, 17 proper types, PGL(2,7)
  const CliRun g = run({"dump", "graph"});
  EXPECT_EQ(line_count(g.out), 22u);
  EXPECT_EQ(heawood::parse_edge_list(g.out), heawood::heawood_standard());
}

TEST(Cli, UsageErrorsExitWithTwo) {
  const CliRun k99 = run({"check", "K99"});
  EXPECT_EQ(k99.code, 2);
  EXPECT_NE(k99.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"all", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"all", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"dump", "cycles"}).code, 2);
  EXPECT_EQ(run({"classify", "--withhold", "A9"}).code, 2);
  EXPECT_EQ(run({"all", "--graph", "/nonexistent/graph.txt"}).code, 2);
}

TEST(Cli, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classify"), std::string::npos);
}

TEST(Cli, GraphOverrideDrivesNegativeControls) {
  const auto petersen = temp_file("heawood_cli_petersen.txt", heawood::to_edge_list(heawood::petersen_graph()));
  const CliRun r = run({"check", "K1", "--graph", petersen.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAILED"), std::string::npos);
  EXPECT_EQ(run({"classify", "--graph", petersen.string()}).code, 1);
  const auto bad = temp_file("heawood_cli_bad.txt", "1 2 3\n");
  EXPECT_EQ(run({"all", "--graph", bad.string()}).code, 2);
  std::filesystem::remove(petersen);
  std::filesystem::remove(bad);
}

TEST(Cli, OutWritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "heawood_cli_out.json";
  const CliRun r = run({"check", "K1", "--format", "machine", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = heawood::Json::parse(in);
  EXPECT_EQ(j["checks"][0]["id"], "K1");
  std::filesystem::remove(path);
}

TEST(Cli, WithheldAxiomStillExitsZeroButOmitsFinalList) {
  const CliRun r = run({"classify", "--withhold", "A5", "--format", "machine"});
  EXPECT_EQ(r.code, 0);
  const auto j = heawood::Json::parse(r.out);
  EXPECT_TRUE(j["final_groups"].empty());
  EXPECT_EQ(j["classification"], "incomplete");
}

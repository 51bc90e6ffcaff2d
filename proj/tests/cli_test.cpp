#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace gallai::cli {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Cli, GenerateWritesGraph6) {
  const auto r = run({"generate", "petersen"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "I?LRCecq?\n");
  EXPECT_EQ(run({"generate", "complete", "2"}).out, "A_\n");
}

TEST(Cli, GeneratorParameterErrorsAreUsageErrors) {
  EXPECT_EQ(run({"generate", "cycle", "2"}).code, kUsageError);
  EXPECT_EQ(run({"generate", "paley", "9"}).code, kUsageError);
  EXPECT_EQ(run({"generate", "cycle", "x"}).code, kUsageError);
  EXPECT_EQ(run({"generate", "dodecahedron"}).code, kUsageError);
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, kUsageError);
}

TEST(Cli, PipelineThroughStdin) {
  const auto g = run({"generate", "petersen"});
  const auto t = run({"transform", "gallai"}, g.out);
  ASSERT_EQ(t.code, kSuccess);
  const auto p = run({"params"}, t.out);
  ASSERT_EQ(p.code, kSuccess);
  const auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["level"], "edge_regular");
  EXPECT_EQ(j["n"], 15);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["lambda"], 1);
}

TEST(Cli, ParamsFromGenerator) {
  const auto j = nlohmann::json::parse(run({"params", "--gen", "paley", "13"}).out);
  EXPECT_EQ(j["level"], "strongly_regular");
  EXPECT_EQ(j["mu"], 3);
}

TEST(Cli, BadInputIsInputError) {
  const auto r = run({"params"}, "B\n");
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"params", "--in", "/nonexistent/graph.g6"}).code, kInputError);
  EXPECT_EQ(run({"params", "--format", "edgelist"}, "0 0\n").code, kInputError);
}

TEST(Cli, EdgeListInput) {
  const auto j = nlohmann::json::parse(run({"params", "--format", "edgelist"}, "0 1\n1 2\n2 0\n").out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["complete_or_empty"], true);
}

TEST(Cli, SpectrumNumericAndClosedForm) {
  const auto numeric = nlohmann::json::parse(run({"spectrum", "--gen", "petersen"}).out);
  EXPECT_EQ(numeric["source"], "numeric");
  EXPECT_EQ(numeric["values"].size(), 10u);
  const auto closed = nlohmann::json::parse(run({"spectrum", "--closed-form", "srg", "--gen", "petersen"}).out);
  EXPECT_EQ(closed["source"], "closed_form");
  EXPECT_EQ(closed["groups"].size(), 3u);
  const auto rcn = nlohmann::json::parse(run({"spectrum", "--closed-form", "rcn", "--gen", "cycle", "6"}).out);
  EXPECT_EQ(rcn["values"].size(), 12u);
  EXPECT_EQ(run({"spectrum", "--closed-form", "srg", "--gen", "path", "4"}).code, kInputError);
  EXPECT_EQ(run({"spectrum", "--closed-form", "rcn", "--gen", "petersen"}).code, kInputError);
}

TEST(Cli, VerifyAllOnCorpusMember) {
  const auto r = run({"verify", "all", "--gen", "octahedron"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["regularity"]["level"], "strongly_regular");
  EXPECT_EQ(j["verdicts"].size(), 10u);
  EXPECT_TRUE(j["timing"].empty());
  EXPECT_EQ(r.out, run({"verify", "all", "--gen", "octahedron"}).out);
}

TEST(Cli, VerifySingleTheoremAndUnknownId) {
  const auto r = run({"verify", "thm-gallai-lambda0", "--gen", "complete_bipartite", "3", "3"});
  ASSERT_EQ(r.code, kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["verdicts"].size(), 1u);
  EXPECT_EQ(j["verdicts"][0]["conclusion_holds"], true);
  EXPECT_EQ(run({"verify", "thm-nonexistent", "--gen", "petersen"}).code, kUsageError);
}

TEST(Cli, VerifyWritesJsonFileAndTiming) {
  const auto path = std::filesystem::temp_directory_path() / "gallai_cli_test_report.json";
  const auto r = run({"verify", "all", "--gen", "petersen", "--json", path.string(), "--timing"});
  ASSERT_EQ(r.code, kSuccess);
  std::ifstream file(path);
  const auto j = nlohmann::json::parse(file);
  EXPECT_TRUE(j["timing"].contains("verify"));
  std::filesystem::remove(path);
}

TEST(Cli, BatchEmitsOneLinePerGraph) {
  const auto r = run({"params", "--batch"}, "A_\nI?LRCecq?\n");
  ASSERT_EQ(r.code, kSuccess);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<nlohmann::json> items;
  while (std::getline(lines, line)) items.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[1]["level"], "strongly_regular");
}

TEST(Cli, InputSourcesAreExclusive) {
  EXPECT_EQ(run({"params", "--in", "x.g6", "--gen", "petersen"}).code, kUsageError);
}

TEST(Cli, Interlace) {
  EXPECT_EQ(run({"interlace", "--inner", "0", "--outer", "1,-1"}).out, "true\n");
  EXPECT_EQ(run({"interlace", "--inner", "5", "--outer", "1,-1"}).out, "false\n");
  EXPECT_EQ(run({"interlace", "--inner", "1,2", "--outer", "1,-1"}).code, kInputError);
  EXPECT_EQ(run({"interlace", "--inner", "a", "--outer", "1,-1"}).code, kInputError);

  const auto path = std::filesystem::temp_directory_path() / "gallai_cli_test_outer.json";
  {
    std::ofstream file(path);
    file << run({"spectrum", "--gen", "petersen"}).out;
  }
  EXPECT_EQ(run({"interlace", "--inner", "1,0,-2", "--outer", path.string()}).out, "true\n");
  std::filesystem::remove(path);
}

TEST(Cli, TransformOperators) {
  EXPECT_EQ(run({"transform", "semitotal", "--gen", "complete", "2"}).out, "Bw\n");
  EXPECT_EQ(run({"transform", "complement", "--gen", "complete", "3"}).out, "B?\n");
  EXPECT_EQ(run({"transform", "twist", "--gen", "complete", "3"}).code, kUsageError);
}

}  // namespace
}  // namespace gallai::cli

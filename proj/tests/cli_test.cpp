#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
};

Run run(const std::string& arguments, const std::string& environment = "") {
  const std::string command = environment + " " + METRIC_REALIZE_CLI + " " + arguments + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t count = 0;
  while ((count = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, count);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("metric_realize_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const auto path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }

  std::filesystem::path dir_;
};

constexpr const char* kPathMatrix = "0,1,2\n1,0,1\n2,1,0\n";
constexpr const char* kSquareMatrix = "0,1,2,1\n1,0,1,2\n2,1,0,1\n1,2,1,0\n";

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(run("check --class snake " + file("path.csv", kPathMatrix)).exit_code, 0);
  EXPECT_EQ(run("check --class tree " + file("square.csv", kSquareMatrix)).exit_code, 1);
  EXPECT_EQ(run("check --class tree " + file("bad.csv", "0,1\n2,0\n")).exit_code, 2);
  EXPECT_EQ(run("check --class tree " + (dir_ / "missing.csv").string()).exit_code, 2);
  EXPECT_EQ(run("check --class hexagon " + file("path2.csv", kPathMatrix)).exit_code, 2);
}

TEST_F(CliTest, OracleAgreesWithRecognizer) {
  const auto square = file("square.csv", kSquareMatrix);
  EXPECT_EQ(run("check --oracle --class polygon " + square).exit_code, 0);
  EXPECT_EQ(run("check --oracle --class tree " + square).exit_code, 1);
}

TEST_F(CliTest, GenWeightsRealizeVerifyPipeline) {
  const auto gen = run("gen --class caterpillar --n 9 --seed 3");
  ASSERT_EQ(gen.exit_code, 0);
  const auto graph = file("graph.json", gen.out);
  const auto weights = run("weights " + graph);
  ASSERT_EQ(weights.exit_code, 0);
  const auto matrix = file("matrix.csv", weights.out);
  const auto realized = run("realize --class caterpillar " + matrix);
  ASSERT_EQ(realized.exit_code, 0);
  const auto rebuilt = file("rebuilt.json", realized.out);
  EXPECT_EQ(run("verify " + rebuilt + " " + matrix).exit_code, 0);
  EXPECT_EQ(run("verify " + graph + " " + matrix).exit_code, 0);
  const auto path = file("path.json", R"({"n":3,"edges":[{"u":1,"v":2,"w":"1"},{"u":2,"v":3,"w":"1"}]})");
  EXPECT_EQ(run("verify " + path + " " + file("k3.csv", "0,1,1\n1,0,1\n1,1,0\n")).exit_code, 1);
  EXPECT_EQ(run("verify " + graph + " " + file("small.csv", kPathMatrix)).exit_code, 2);
  EXPECT_EQ(gen.out, run("gen --class caterpillar --n 9 --seed 3").out);
}

TEST_F(CliTest, DotAndJsonFormats) {
  const auto k3 = file("k3.csv", "0,1,1\n1,0,1\n1,1,0\n");
  const auto dot = run("--format dot realize --class complete " + k3);
  ASSERT_EQ(dot.exit_code, 0);
  EXPECT_EQ(dot.out.rfind("graph G {", 0), 0U);
  const auto json = run("weights --format json " + file("g.json", R"({"n":2,"edges":[{"u":1,"v":2,"w":"5"}]})"));
  ASSERT_EQ(json.exit_code, 0);
  EXPECT_NE(json.out.find("\"entries\""), std::string::npos);
}

TEST_F(CliTest, ClassifyReportsEveryClass) {
  const auto result = run("classify " + file("square.csv", kSquareMatrix));
  ASSERT_EQ(result.exit_code, 0);
  for (const char* cls : {"snake", "caterpillar", "tree", "polygon", "pruned_polygon", "complete", "bipartite",
                          "complete_bipartite", "planar", "arbitrary_connected"}) {
    EXPECT_NE(result.out.find(std::string("\"") + cls + "\""), std::string::npos) << cls;
  }
}

TEST_F(CliTest, ToleranceFromEnvironment) {
  const auto nearly = file("nearly.csv", "0,1,2.0000001\n1,0,1\n2.0000001,1,0\n");
  EXPECT_EQ(run("check --class snake " + nearly).exit_code, 1);
  EXPECT_EQ(run("check --class snake " + nearly, "METRIC_REALIZE_TOL=1e-6").exit_code, 0);
  EXPECT_EQ(run("--tol 1e-6 check --class snake " + nearly).exit_code, 0);
  EXPECT_EQ(run("--exact check --class snake " + nearly, "METRIC_REALIZE_TOL=1e-6").exit_code, 1);
  EXPECT_EQ(run("check --class snake " + nearly, "METRIC_REALIZE_TOL=abc").exit_code, 2);
}

TEST_F(CliTest, PruneReadsStdin) {
  const auto graph = file("tri.json",
                          R"({"n":3,"edges":[{"u":1,"v":2,"w":"1"},{"u":2,"v":3,"w":"1"},{"u":1,"v":3,"w":"5"}]})");
  const auto result = run("prune - < " + graph);
  ASSERT_EQ(result.exit_code, 0);
  EXPECT_EQ(result.out.find("\"5\""), std::string::npos);
}

}  // namespace

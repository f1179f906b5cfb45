// Copyright 2026 The enum2aug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the enum2aug binary and checks exit codes and outputs.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace enum2aug {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string& args) {
  std::string cmd = std::string(ENUM2AUG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o;
  if (pipe == nullptr) return o;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, got);
  int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("enum2aug_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    // Bicyclic target with a carbonyl and a methyl group.
    write("target.graph",
          "graph 7 8\n0 C\n1 C\n2 C\n3 C\n4 C\n5 O\n6 C\n"
          "0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 6 1\n2 3 1\n3 4 1\n4 5 2\n");
    // The seed is the target's parent, so the target is one of its children.
    std::ifstream target(dir_ / "target.graph");
    std::ostringstream seed;
    write_graph(seed,
                parent_of(parse_graphs(target, Alphabet::Chemical(), 2)[0])
                    .parent);
    write("seed.graph", seed.str());
    write("bounds.txt",
          "sigma O C\nvalence O=2\nvalence C=4\nmaxmult 2\nmaxlen 1\n"
          "seq O 1 1\nseq C 6 6\nseq C 1 C 12 14\nseq C 2 O 1 1\n"
          "seq O 2 C 1 1\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitWithOne) {
  EXPECT_EQ(run_cli("").code, 1);
  EXPECT_EQ(run_cli("frobnicate").code, 1);
  EXPECT_EQ(run_cli("enumerate --mode a --L 1").code, 1);
  EXPECT_EQ(run_cli("enumerate --target " + path("target.graph") +
                    " --K 2 --L 1 --s 0 --mode q --feed-oracle")
                .code,
            1);
  EXPECT_EQ(run_cli("oracle --n 3 --d 1 --class tree").code, 1);
  EXPECT_EQ(run_cli("--help").code, 0);
}

TEST_F(CliTest, InvalidInputsExitWithTwo) {
  write("bad.graph", "graph 2 1\n0 C\n1 C\n1 0 1\n");
  EXPECT_EQ(run_cli("check-child --graph " + path("bad.graph") +
                    " --x 0 --y 1 --p 1")
                .code,
            2);
  EXPECT_EQ(run_cli("check-child --graph " + path("missing.graph") +
                    " --x 0 --y 1 --p 1")
                .code,
            2);
  // Adjacent pair.
  EXPECT_EQ(run_cli("check-child --graph " + path("seed.graph") +
                    " --x 4 --y 5 --p 1")
                .code,
            2);
  write("inverted.txt", "sigma C\nvalence C=4\nmaxmult 1\nmaxlen 1\n"
                        "seq C 3 3\nseq C 1 C 5 2\n");
  EXPECT_EQ(run_cli("enumerate --monocyclic " + path("seed.graph") +
                    " --bounds " + path("inverted.txt") + " --mode a --L 1")
                .code,
            2);
}

TEST_F(CliTest, EnumerateFromTargetIsDeterministic) {
  const std::string args = "enumerate --target " + path("target.graph") +
                           " --K 2 --L 1 --s 1 --mode a --feed-oracle";
  Outcome a = run_cli(args + " --out " + path("a.txt"));
  Outcome b = run_cli(args + " --out " + path("b.txt") + " --jobs 2");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  const std::string text = slurp(path("a.txt"));
  EXPECT_EQ(text, slurp(path("b.txt")));
  EXPECT_EQ(text.rfind("# enum2aug results\n# instance target K 2 L 1 s 1 "
                       "mode a\n",
                       0),
            0u);
  std::istringstream in(text);
  StatsRow row = read_results_summary(in);
  EXPECT_GT(row.count, 0);
  Outcome count = run_cli(args + " --count-only");
  ASSERT_EQ(count.code, 0);
  EXPECT_EQ(count.out, std::to_string(row.count) + "\n");
}

TEST_F(CliTest, EnumerateFromSeedFileAndBounds) {
  Outcome o = run_cli("enumerate --monocyclic " + path("seed.graph") +
                      " --bounds " + path("bounds.txt") + " --mode a --L 1");
  ASSERT_EQ(o.code, 0);
  std::istringstream in(o.out);
  StatsRow row = read_results_summary(in);
  EXPECT_EQ(row.instance_id, "bounds");
  EXPECT_EQ(row.seeds, 1);
  EXPECT_GE(row.count, 1);
  EXPECT_NE(o.out.find("# seed 0 pair "), std::string::npos);
}

TEST_F(CliTest, OracleListsClasses) {
  Outcome o = run_cli("oracle --n 4 --d 1 --class monoblock2");
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("# count "), std::string::npos);
  std::istringstream in(o.out);
  auto graphs = parse_graphs(in, Alphabet::Chemical(), 1);
  EXPECT_EQ(o.out.find("# count " + std::to_string(graphs.size()) + "\n"),
            o.out.size() - ("# count " + std::to_string(graphs.size()) +
                            "\n").size());
  for (const auto& g : graphs) EXPECT_TRUE(is_mono_block(g));
}

TEST_F(CliTest, CheckChildPrintsTheVerdict) {
  write("triangle.graph", "graph 5 5\n0 C\n1 C\n2 C\n3 C\n4 C\n"
                          "0 1 1\n0 2 1\n0 3 1\n1 2 1\n3 4 1\n");
  Outcome o = run_cli("check-child --graph " + path("triangle.graph") +
                      " --x 1 --y 4 --p 1");
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("condition 5"), std::string::npos);
  EXPECT_NE(o.out.find("\nchild\n"), std::string::npos);
}

TEST_F(CliTest, StatsWritesOneRowPerResultsFile) {
  const std::string base = "enumerate --target " + path("target.graph") +
                           " --K 2 --mode a --feed-oracle --timing";
  ASSERT_EQ(run_cli(base + " --L 1 --s 0 --out " + path("r0.txt")).code, 0);
  ASSERT_EQ(run_cli(base + " --L 2 --s 1 --out " + path("r1.txt")).code, 0);
  ASSERT_EQ(run_cli("stats --results " + path("r0.txt") + " " +
                    path("r1.txt") + " --csv " + path("s.csv"))
                .code,
            0);
  std::istringstream csv(slurp(path("s.csv")));
  std::string line;
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_NE(slurp(path("s.csv")).find("target,2,2,1,a,"), std::string::npos);
}

}  // namespace
}  // namespace enum2aug

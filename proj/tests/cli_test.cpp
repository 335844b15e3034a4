// Copyright 2026 The Cathedral Authors.
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

#include "cli.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

namespace cathedral::cli {
namespace {

using ::testing::HasSubstr;
namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) {
  return std::string(CATHEDRAL_SAMPLES_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(CATHEDRAL_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in) << "missing golden file " << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("cathedral_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                   ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

struct GoldenCase {
  std::vector<std::string> args;
  std::string file;
};

TEST(CliGoldenTest, OutputsMatchPinnedFiles) {
  const std::vector<GoldenCase> cases = {
      {{"analyze", sample("p4.edges"), "--format", "json"}, "p4.analysis.json"},
      {{"analyze", sample("c4.edges"), "--format", "json"}, "c4.analysis.json"},
      {{"analyze", sample("t.edges"), "--format", "json", "--ge"}, "t.analysis.json"},
      {{"analyze", sample("t.edges")}, "t.analysis.txt"},
      {{"saturate", sample("c4.edges")}, "c4.saturate.edges"},
      {{"saturate", sample("p4.edges")}, "p4.saturate.edges"},
      {{"decompose", sample("t.edges")}, "t.tree.json"},
      {{"hasse", sample("t.edges")}, "t.hasse.dot"},
  };
  for (const auto& c : cases) {
    const CliRun r = run(c.args);
    EXPECT_EQ(r.code, 0) << c.file << ": " << r.err;
    EXPECT_EQ(r.out, golden(c.file)) << c.file;
  }
}

TEST(CliTest, SaturatedExitCodes) {
  EXPECT_EQ(run({"saturated", sample("t.edges")}).code, 0);
  EXPECT_EQ(run({"saturated", sample("c4_chord.edges")}).code, 0);
  EXPECT_EQ(run({"saturated", sample("p4.edges")}).code, 1);
  EXPECT_EQ(run({"saturated", sample("c4.edges")}).code, 1);
}

TEST(CliTest, DecomposeConstructRoundTripThroughFiles) {
  TempDir dir;
  const std::string sat = dir.file("p4.sat");
  const std::string tree = dir.file("tree.json");
  const std::string back = dir.file("back.edges");
  ASSERT_EQ(run({"saturate", sample("p4.edges"), "-o", sat}).code, 0);
  ASSERT_EQ(run({"decompose", sat, "-o", tree}).code, 0);
  ASSERT_EQ(run({"construct", tree, "-o", back}).code, 0);
  EXPECT_EQ(parse_edge_list(slurp(back)), parse_edge_list(slurp(sat)));
  EXPECT_EQ(parse_edge_list(slurp(back)), fixtures::t());
}

TEST(CliTest, PreconditionFailuresExitThree) {
  CliRun r = run({"decompose", sample("p4.edges")});
  EXPECT_EQ(r.code, 3);
  EXPECT_THAT(r.err, HasSubstr("[NotSaturated]"));
  EXPECT_EQ(run({"hasse", sample("t.edges"), "--max-components", "1"}).code, 3);

  TempDir dir;
  const std::string odd = dir.file("odd.edges");
  spit(odd, "vertices 3\n0 1\n1 2\n");
  EXPECT_EQ(run({"saturate", odd}).code, 3);
  EXPECT_EQ(run({"verify", odd}).code, 3);
}

TEST(CliTest, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"analyze", "/nonexistent/graph.edges"}).code, 2);
  EXPECT_EQ(run({"analyze", sample("t.edges"), "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--p", "2"}).code, 2);

  TempDir dir;
  const std::string bad = dir.file("bad.edges");
  spit(bad, "vertices 2\n0 5\n");
  CliRun r = run({"analyze", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_THAT(r.err, HasSubstr("line 2"));

  const std::string tree = dir.file("tree.json");
  for (const std::string doc : {"{", "[]", R"({"foundation": 3, "classes": []})",
                                R"({"foundation": {"vertices": [0, 1], "edges": [[0]]},
                                    "classes": []})"}) {
    spit(tree, doc);
    CliRun c = run({"construct", tree});
    EXPECT_EQ(c.code, 2) << doc;
    EXPECT_THAT(c.err, HasSubstr("MalformedDocument")) << doc;
  }
}

TEST(CliTest, HelpExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, HasSubstr("decompose"));
}

TEST(CliTest, VerifyFileAndBatch) {
  CliRun file = run({"verify", sample("p4.edges"), "--format", "json"});
  EXPECT_EQ(file.code, 0) << file.err;
  auto doc = nlohmann::json::parse(file.out);
  EXPECT_TRUE(doc["passed"].get<bool>());

  const std::vector<std::string> args = {"verify",  "--seed",   "3",      "--trials",
                                         "6",       "--max-n",  "6",      "--format",
                                         "json"};
  CliRun a = run(args);
  CliRun b = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto batch = nlohmann::json::parse(a.out);
  EXPECT_EQ(batch["trials"], 6);
  EXPECT_TRUE(batch["checks"].is_array());
  EXPECT_TRUE(batch["checks"][0]["millis"].is_null());

  CliRun timed = run({"verify", "--trials", "2", "--max-n", "4", "--timing",
                   "--format", "json"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out)["checks"][0]["millis"].is_number());

  CliRun text = run({"verify", "--trials", "2", "--max-n", "4"});
  EXPECT_EQ(text.code, 0);
  EXPECT_FALSE(text.out.empty());
}

}  // namespace
}  // namespace cathedral::cli

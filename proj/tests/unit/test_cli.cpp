// Copyright 2026 The Lemma Forge Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace lemma_forge::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lemma_forge_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    write("g5.trace", "A3\nA3\nC5 1 2\nC7 3 1\nC9 4 3\n");
    write("g5.names", "5 T\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int call(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    for (auto& a : args) {
      if (a.starts_with("@")) a = path(a.substr(1));
    }
    return run(args, out_, err_);
  }

  std::vector<std::string> g5(const std::string& cmd) {
    return {cmd, "--trace", "@g5.trace", "--names", "@g5.names",
            "--axiom-tags", "A"};
  }
  std::vector<std::string> with(std::vector<std::string> base,
                                std::initializer_list<std::string> more) {
    base.insert(base.end(), more);
    return base;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, RankTop3) {
  ASSERT_EQ(call(with(g5("rank"), {"--metric", "q1", "--top", "3"})), kExitOk)
      << err_.str();
  EXPECT_EQ(out_.str(),
            "1\t1\t1.00000000000\t-\n"
            "2\t3\t0.800000000000\t-\n"
            "3\t2\t0.666666666667\t-\n");
}

TEST_F(CliTest, RankToFileAndPageRank) {
  ASSERT_EQ(call(with(g5("rank"),
                      {"--metric", "pr2", "--top", "5", "--out", "@r.tsv"})),
            kExitOk);
  EXPECT_EQ(out_.str(), "");
  const std::string r = read("r.tsv");
  EXPECT_EQ(std::count(r.begin(), r.end(), '\n'), 5);
}

TEST_F(CliTest, ParseCheckReportsLine) {
  write("bad.trace", "F13\nE13 6 3\n");
  EXPECT_EQ(call({"parse-check", "--trace", "@bad.trace"}), kExitInputError);
  EXPECT_NE(err_.str().find("line 2"), std::string::npos) << err_.str();

  ASSERT_EQ(call({"parse-check", "--trace", "@g5.trace", "--edge-list",
                  "@edges"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "lemmas\t5\nedges\t6\n");
  EXPECT_EQ(read("edges"), "3 1\n3 2\n4 3\n4 1\n5 4\n5 3\n");
}

TEST_F(CliTest, SelectPrefixAndNamesOut) {
  ASSERT_EQ(call(with(g5("select"), {"--metric", "q2", "--count", "1"})),
            kExitOk);
  const std::string one = out_.str();
  ASSERT_EQ(call(with(g5("select"), {"--metric", "q2", "--count", "2",
                                     "--names-out", "@new.names"})),
            kExitOk);
  const std::string two = out_.str();
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 1);
  EXPECT_EQ(two.substr(0, one.size()), one);
  EXPECT_EQ(one, "1\t3\t0.160000000000\tLEMMA_00001\n");
  EXPECT_EQ(read("new.names"), "3 LEMMA_00001\n4 LEMMA_00002\n5 T\n");
}

TEST_F(CliTest, SelectFromScratchWithCheckpoints) {
  ASSERT_EQ(call(with(g5("select"),
                      {"--metric", "q1", "--count", "3", "--from-scratch",
                       "--checkpoint-every", "1", "--out", "@sel.tsv"})),
            kExitOk);
  const std::string log = err_.str();
  EXPECT_EQ(std::count(log.begin(), log.end(), '\n'), 3) << log;
  const std::string sel = read("sel.tsv");
  EXPECT_EQ(sel.substr(0, sel.find('\t', 2)), "1\t3");
  EXPECT_EQ(call(with(g5("select"), {"--count", "1", "--from-scratch",
                                     "--extend"})),
            kExitInputError);
}

TEST_F(CliTest, ReproducibleAcrossThreadCounts) {
  ASSERT_EQ(call(with(g5("rank"), {"--metric", "pr5", "--top", "5",
                                   "--threads", "1"})),
            kExitOk);
  const std::string single = out_.str();
  ASSERT_EQ(call(with(g5("rank"), {"--metric", "pr5", "--top", "5",
                                   "--threads", "4"})),
            kExitOk);
  EXPECT_EQ(out_.str(), single);
}

TEST_F(CliTest, ScenarioCommands) {
  write("best", "1\n2\n3\n");
  ASSERT_EQ(call(with(g5("chrono-export"), {"--best", "@best"})), kExitOk);
  EXPECT_EQ(out_.str(), "1:\n2:\n3: 1 2\n5: 1 3\n");
  ASSERT_EQ(call(with(g5("derive"), {"--best", "@best"})), kExitOk);
  EXPECT_EQ(out_.str(), "3 1\n3 2\n5 1\n5 3\n");
  ASSERT_EQ(call(with(g5("problems"), {"--best", "@best", "--mode", "cheating"})),
            kExitOk);
  EXPECT_EQ(out_.str(), "5: 1 3\n");
  ASSERT_EQ(call(with(g5("problems"), {"--best", "@best"})), kExitOk);
  EXPECT_EQ(out_.str(), "5: 1\n");
  EXPECT_EQ(call(with(g5("problems"), {"--best", "@best", "--mode", "x"})),
            kExitInputError);
}

TEST_F(CliTest, HonestRun) {
  write("h.trace", "A2\nC3 1\nC4 2\nC5 3 1\nC6 4\n");
  write("h.names", "3 T3\n5 T5\n");
  ASSERT_EQ(call({"honest-run", "--trace", "@h.trace", "--names", "@h.names",
                  "--axiom-tags", "A", "--metric", "q1", "--step", "1",
                  "--count", "1"}),
            kExitOk)
      << err_.str();
  const std::string out = out_.str();
  // Theorem 3 sees no earlier named theorem, so every use count is zero.
  EXPECT_EQ(out, "3\t1\t2\t0.00000000000\n5\t1\t2\t0.333333333333\n");
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 2);
}

TEST_F(CliTest, NormalizeAndStats) {
  write("v.trace", "A3\nC5 1\nC5 1\nC7 3\n");
  write("v.nf", "2\tx=x\n3\tx=x\n");
  ASSERT_EQ(call({"normalize", "--trace", "@v.trace", "--normal-forms",
                  "@v.nf"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "A3\nC5 1\nC5 1\nC7 2\n");
  ASSERT_EQ(call({"normalize", "--trace", "@v.trace", "--normal-forms",
                  "@v.nf", "--prune"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "A3\nC5 1\nC7 2\n");
  ASSERT_EQ(call({"stats", "--trace", "@v.trace", "--normal-forms", "@v.nf",
                  "--axiom-tags", "A"}),
            kExitOk);
  EXPECT_NE(out_.str().find("distinct_normal_forms\t3\n"), std::string::npos);
  EXPECT_NE(out_.str().find("axioms\t1\n"), std::string::npos);
}

TEST_F(CliTest, ChainLevels) {
  write("prov", "3 0\n4\n6 2\n");
  ASSERT_EQ(call({"chain-levels", "--names", "@g5.names", "--provable",
                  "@prov"}),
            kExitOk);
  EXPECT_EQ(out_.str(), "3\t0\n4\tnone\n6\t2\n");
}

TEST_F(CliTest, GenerateThenParse) {
  ASSERT_EQ(call({"generate", "--lemmas", "500", "--seed", "3", "--out",
                  "@s.trace", "--names-out", "@s.names"}),
            kExitOk);
  ASSERT_EQ(call({"parse-check", "--trace", "@s.trace"}), kExitOk);
  EXPECT_EQ(out_.str().substr(0, out_.str().find('\n')), "lemmas\t500");
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}), kExitInputError);
  EXPECT_EQ(call({"frobnicate"}), kExitInputError);
  EXPECT_EQ(call(with(g5("rank"), {"--bogus"})), kExitInputError);
  EXPECT_EQ(call(with(g5("rank"), {"--metric", "q9"})), kExitInputError);
  EXPECT_EQ(call(with(g5("rank"), {"--damping", "1.5"})), kExitInputError);
  EXPECT_EQ(call({"rank", "--trace", "@missing"}), kExitInputError);
  EXPECT_EQ(call({"--help"}), kExitOk);
  EXPECT_NE(out_.str().find("honest-run"), std::string::npos);
}

TEST_F(CliTest, NeverOverwritesInputs) {
  const std::string before = read("g5.trace");
  EXPECT_EQ(call(with(g5("rank"), {"--out", "@g5.trace"})), kExitInputError);
  EXPECT_EQ(read("g5.trace"), before);
}

TEST_F(CliTest, OutOfRangeName) {
  write("bad.names", "9 X\n");
  EXPECT_EQ(call({"rank", "--trace", "@g5.trace", "--names", "@bad.names"}),
            kExitInputError);
}

}  // namespace
}  // namespace lemma_forge::cli

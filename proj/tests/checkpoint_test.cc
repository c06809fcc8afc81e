// Copyright 2026 The squco Authors
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

#include "squco/checkpoint.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "squco/errors.h"

namespace squco {
namespace {

class CheckpointTest : public testing::Test {
 protected:
  void SetUp() override {
    path_ = std::filesystem::temp_directory_path() /
            ("squco_ckpt_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove(path_);
  }
  void TearDown() override { std::filesystem::remove(path_); }

  SearchConfig Config() const {
    SearchConfig c;
    c.min_order = 4;
    c.max_order = 8;
    c.filters = {Filter::kConnected};
    c.checkpoint = path_;
    return c;
  }

  std::string ReadAll() const {
    std::ifstream in(path_);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void WriteAll(const std::string& text) const {
    std::ofstream out(path_, std::ios::trunc);
    out << text;
  }

  std::filesystem::path path_;
};

TEST(HashHexTest, KnownValues) {
  // FNV-1a 64 reference values.
  EXPECT_EQ(HashHex(""), "cbf29ce484222325");
  EXPECT_EQ(HashHex("a"), "af63dc4c8601ec8c");
}

TEST_F(CheckpointTest, InterruptAndResumeMatchesUninterrupted) {
  SearchConfig plain = Config();
  plain.checkpoint.reset();
  const SearchSummary reference = Enumerate(plain);

  SearchConfig first = Config();
  first.stop_after_branches = reference.branches_total / 2;
  const SearchSummary partial = Enumerate(first);
  ASSERT_FALSE(partial.complete);
  EXPECT_EQ(partial.branches_completed, reference.branches_total / 2);

  std::size_t resumed_calls = 0;
  SearchConfig second = Config();
  second.progress = [&](std::size_t done, std::size_t total) {
    ++resumed_calls;
    EXPECT_LE(done, total);
  };
  const SearchSummary resumed = Enumerate(second);
  EXPECT_TRUE(resumed.complete);
  EXPECT_TRUE(resumed.SameResults(reference));
  // Only the branches missing from the checkpoint ran again.
  EXPECT_EQ(resumed_calls, reference.branches_total - reference.branches_total / 2);

  // A third run finds everything finished.
  const SearchSummary again = Enumerate(Config());
  EXPECT_TRUE(again.SameResults(reference));
}

TEST_F(CheckpointTest, ResumeAcrossWorkerCounts) {
  SearchConfig plain = Config();
  plain.checkpoint.reset();
  const SearchSummary reference = Enumerate(plain);
  SearchConfig first = Config();
  first.jobs = 4;
  first.stop_after_branches = 5;
  Enumerate(first);
  SearchConfig second = Config();
  second.jobs = 3;
  EXPECT_TRUE(Enumerate(second).SameResults(reference));
}

TEST_F(CheckpointTest, MismatchedConfigIsRefused) {
  SearchConfig first = Config();
  first.stop_after_branches = 1;
  Enumerate(first);
  SearchConfig other = Config();
  other.min_girth = 4;
  EXPECT_THROW(Enumerate(other), CheckpointError);
}

TEST_F(CheckpointTest, EmptyFileStartsFresh) {
  WriteAll("");
  const SearchSummary s = Enumerate(Config());
  EXPECT_TRUE(s.complete);
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_NE(s.warnings[0].find("empty"), std::string::npos);
}

TEST_F(CheckpointTest, TamperedLineIsRefused) {
  SearchConfig first = Config();
  first.stop_after_branches = 2;
  Enumerate(first);
  std::string text = ReadAll();
  const std::size_t at = text.find("order ");
  ASSERT_NE(at, std::string::npos);
  text[at + 8] = text[at + 8] == '1' ? '2' : '1';
  WriteAll(text);
  EXPECT_THROW(Enumerate(Config()), CheckpointError);
}

TEST_F(CheckpointTest, TruncatedRecordIsRedone) {
  SearchConfig plain = Config();
  plain.checkpoint.reset();
  const SearchSummary reference = Enumerate(plain);
  SearchConfig first = Config();
  first.stop_after_branches = 2;
  Enumerate(first);
  // Drop the final end line, as if the process died mid-record.
  std::string text = ReadAll();
  text.erase(text.rfind("end "));
  WriteAll(text);
  const SearchSummary resumed = Enumerate(Config());
  EXPECT_TRUE(resumed.SameResults(reference));
  ASSERT_FALSE(resumed.warnings.empty());
}

TEST_F(CheckpointTest, RecordFormat) {
  SearchConfig first = Config();
  first.stop_after_branches = 1;
  Enumerate(first);
  std::istringstream lines(ReadAll());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("squco-checkpoint v1 config=" + Config().Digest() + " version=1.0.0", 0), 0u);
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("branch 0 accepted=", 0), 0u);
  while (std::getline(lines, line)) {
    const std::size_t star = line.rfind(" *");
    ASSERT_NE(star, std::string::npos);
    EXPECT_EQ(HashHex(line.substr(0, star)), line.substr(star + 2));
  }
}

}  // namespace
}  // namespace squco

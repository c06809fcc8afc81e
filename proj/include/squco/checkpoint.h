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

#ifndef SQUCO_CHECKPOINT_H_
#define SQUCO_CHECKPOINT_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "squco/enumerate.h"

namespace squco {

// Line-oriented, append-only record of finished enumeration branches:
//
//   squco-checkpoint v1 config=<digest> version=<v> branches=<total> *<hash>
//   branch <id> accepted=<count> *<hash>
//   order <id> <n> <generated> <accepted> *<hash>
//   reject <id> <check> <count> *<hash>
//   cert <id> <certificate hex> *<hash>
//   end <id> *<hash>
//
// Each line ends with the FNV-1a 64 hash of the text before " *". A branch
// counts as finished only once its end line is present.
class Checkpoint {
 public:
  // Loads finished branches from path. A missing or empty file starts a new
  // checkpoint and sets *warning for the empty case. Throws CheckpointError on
  // hash mismatch, malformed records, or a header for a different search.
  static Checkpoint Open(const std::filesystem::path& path, const std::string& config_digest,
                         std::size_t total_branches, std::string* warning);

  Checkpoint(Checkpoint&&) = default;

  const std::map<std::size_t, SearchSummary>& finished() const { return finished_; }

  // Appends one branch record and flushes. Safe to call from several threads.
  void Save(std::size_t branch, const SearchSummary& partial);

 private:
  Checkpoint() = default;

  std::map<std::size_t, SearchSummary> finished_;
  std::ofstream out_;
  std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string HashHex(std::string_view text);

}  // namespace squco

#endif  // SQUCO_CHECKPOINT_H_

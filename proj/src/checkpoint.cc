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

#include <cstdint>
#include <sstream>
#include <vector>

#include "squco/errors.h"

namespace squco {

std::string HashHex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kDigits[h & 15];
  return out;
}

namespace {

constexpr std::string_view kMagic = "squco-checkpoint v1";

std::string Sealed(const std::string& content) {
  return content + " *" + HashHex(content) + "\n";
}

std::string HeaderText(const std::string& digest, std::size_t total) {
  return std::string(kMagic) + " config=" + digest + " version=" + std::string(kToolVersion) +
         " branches=" + std::to_string(total);
}

std::vector<std::string> Split(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

std::uint64_t ParseCount(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(token, &used);
    if (used == token.size()) return value;
  } catch (const std::exception&) {
  }
  throw CheckpointError("checkpoint line " + std::to_string(line) + ": bad number '" + token +
                        "'");
}

}  // namespace

Checkpoint Checkpoint::Open(const std::filesystem::path& path, const std::string& config_digest,
                            std::size_t total_branches, std::string* warning) {
  Checkpoint cp;
  std::error_code ec;
  const bool exists = std::filesystem::exists(path, ec);
  const bool empty = !exists || std::filesystem::file_size(path, ec) == 0;
  if (empty) {
    if (exists && warning) *warning = "checkpoint " + path.string() + " is empty; starting from scratch";
    cp.out_.open(path, std::ios::out | std::ios::trunc);
    if (!cp.out_) throw CheckpointError("cannot write checkpoint " + path.string());
    cp.out_ << Sealed(HeaderText(config_digest, total_branches));
    cp.out_.flush();
    return cp;
  }

  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot read checkpoint " + path.string());
  std::string line;
  std::size_t line_no = 0;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t open_branch = kNone;  // id of the record being read
  std::uint64_t declared = 0;
  SearchSummary partial;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t star = line.rfind(" *");
    if (star == std::string::npos || HashHex(line.substr(0, star)) != line.substr(star + 2)) {
      throw CheckpointError("checkpoint line " + std::to_string(line_no) +
                            ": integrity hash mismatch");
    }
    const std::string content = line.substr(0, star);
    if (line_no == 1) {
      if (content != HeaderText(config_digest, total_branches)) {
        throw CheckpointError("checkpoint " + path.string() +
                              " was written for a different search configuration (" +
                              content + ")");
      }
      continue;
    }
    const std::vector<std::string> t = Split(content);
    auto expect_fields = [&](std::size_t n) {
      if (t.size() != n) {
        throw CheckpointError("checkpoint line " + std::to_string(line_no) + ": malformed record");
      }
    };
    if (t.empty()) expect_fields(1);
    const std::string& kind = t[0];
    if (kind == "branch") {
      expect_fields(3);
      if (open_branch != kNone || t[2].rfind("accepted=", 0) != 0) expect_fields(0);
      open_branch = ParseCount(t[1], line_no);
      if (open_branch >= total_branches) expect_fields(0);
      declared = ParseCount(t[2].substr(9), line_no);
      partial = SearchSummary{};
      continue;
    }
    if (open_branch == kNone || t.size() < 2 || ParseCount(t[1], line_no) != open_branch) {
      expect_fields(0);
    }
    if (kind == "order") {
      expect_fields(5);
      OrderCount& c = partial.per_order[static_cast<int>(ParseCount(t[2], line_no))];
      c.generated = ParseCount(t[3], line_no);
      c.accepted = ParseCount(t[4], line_no);
    } else if (kind == "reject") {
      expect_fields(4);
      partial.rejections[t[2]] = ParseCount(t[3], line_no);
    } else if (kind == "cert") {
      expect_fields(3);
      try {
        partial.accepted.push_back(Certificate::FromHex(t[2]));
      } catch (const InputError& e) {
        throw CheckpointError("checkpoint line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (kind == "end") {
      expect_fields(2);
      if (partial.accepted.size() != declared) {
        throw CheckpointError("checkpoint branch " + std::to_string(open_branch) +
                              ": certificate count mismatch");
      }
      cp.finished_[open_branch] = std::move(partial);
      partial = SearchSummary{};
      open_branch = kNone;
    } else {
      expect_fields(0);
    }
  }
  if (line_no == 0) throw CheckpointError("checkpoint " + path.string() + " has no header");
  if (open_branch != kNone && warning) {
    *warning = "checkpoint branch " + std::to_string(open_branch) +
               " has no end record; it will be redone";
  }
  in.close();
  cp.out_.open(path, std::ios::out | std::ios::app);
  if (!cp.out_) throw CheckpointError("cannot append to checkpoint " + path.string());
  return cp;
}

void Checkpoint::Save(std::size_t branch, const SearchSummary& partial) {
  const std::string id = std::to_string(branch);
  std::string record = Sealed("branch " + id + " accepted=" + std::to_string(partial.accepted.size()));
  for (const auto& [order, count] : partial.per_order) {
    record += Sealed("order " + id + " " + std::to_string(order) + " " +
                     std::to_string(count.generated) + " " + std::to_string(count.accepted));
  }
  for (const auto& [name, count] : partial.rejections) {
    record += Sealed("reject " + id + " " + name + " " + std::to_string(count));
  }
  for (const Certificate& c : partial.accepted) record += Sealed("cert " + id + " " + c.ToHex());
  record += Sealed("end " + id);
  std::lock_guard<std::mutex> lock(*mu_);
  out_ << record;
  out_.flush();
  if (!out_) throw CheckpointError("checkpoint write failed");
}

}  // namespace squco

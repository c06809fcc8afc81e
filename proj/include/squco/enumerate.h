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

#ifndef SQUCO_ENUMERATE_H_
#define SQUCO_ENUMERATE_H_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "squco/canonical.h"
#include "squco/graph.h"
#include "squco/squco.h"

namespace squco {

inline constexpr std::string_view kToolVersion = "1.0.0";

// Tally keys for the leaf checks that are not part of the filter battery.
inline constexpr std::string_view kMaxGirthCheck = "max-girth";
inline constexpr std::string_view kSqucoCheck = "squco";

struct SearchConfig {
  int min_order = 1;
  int max_order = 1;
  // Monotone prune: no cycle shorter than this anywhere in the tree.
  std::optional<int> min_girth;
  // Leaf check: girth must be finite and at most this.
  std::optional<int> max_girth;
  // Monotone prune on every vertex degree.
  std::optional<int> max_degree;
  // Leaf filters, run in the given order before the squco check.
  std::vector<Filter> filters;
  bool squco_check = false;

  // Execution settings; they do not change the result.
  int jobs = 1;
  std::optional<std::filesystem::path> checkpoint;
  // Stop after this many branches finish in this run (0 = never). Used to
  // exercise resumption.
  std::size_t stop_after_branches = 0;
  const std::atomic<bool>* cancel = nullptr;
  std::function<void(std::size_t done, std::size_t total)> progress;

  // Throws InputError when the orders fall outside 1..kMaxOrder, are
  // reversed, or min_girth < 3.
  void Validate() const;
  // Stable text of the result-relevant fields.
  std::string CanonicalText() const;
  std::string Digest() const;
};

struct OrderCount {
  std::uint64_t generated = 0;  // classes surviving the monotone prunes
  std::uint64_t accepted = 0;   // of those, classes passing every leaf check
  bool operator==(const OrderCount&) const = default;
};

struct SearchSummary {
  std::map<int, OrderCount> per_order;
  std::map<std::string, std::uint64_t> rejections;
  std::vector<Certificate> accepted;  // sorted, pairwise distinct
  std::size_t branches_total = 0;
  std::size_t branches_completed = 0;
  bool complete = true;
  std::vector<std::string> warnings;

  // Results only; branch bookkeeping is ignored.
  bool SameResults(const SearchSummary& other) const;
  // Adds counts and appends certificates; the caller re-sorts 'accepted'.
  void MergeFrom(const SearchSummary& part);
  std::uint64_t TotalAccepted() const { return accepted.size(); }
};

using ReportVisitor = std::function<void(const Graph&, const PropertyReport&)>;

// Isomorph-free exhaustive generation by canonical vertex augmentation. Each
// class of graphs within the order range that survives the monotone prunes is
// generated once; the leaf checks decide acceptance. Branches are the class
// representatives at the first order >= min_order that has at least
// kMinBranches of them (or at max_order). Throws InputError for invalid
// configs and CheckpointError for unusable checkpoints.
SearchSummary Enumerate(const SearchConfig& config);

// As above, then calls visit on every accepted graph (canonical
// representative) in certificate order, after the search has finished.
SearchSummary Enumerate(const SearchConfig& config, const ReportVisitor& visit);

inline constexpr std::size_t kMinBranches = 128;

// The canonical representatives of the accepted classes, in summary order.
std::vector<Graph> AcceptedGraphs(const SearchSummary& summary);

}  // namespace squco

#endif  // SQUCO_ENUMERATE_H_

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

#ifndef SQUCO_SQUCO_H_
#define SQUCO_SQUCO_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squco/graph.h"

namespace squco {

// True iff square(g) is isomorphic to complement(g).
bool IsSquco(const Graph& g);

// Necessary conditions for the squco property, cheapest first. "Nontrivial"
// means order >= 2.
enum class Filter {
  kLowDegree,          // nontrivial with max degree <= 2 => C7
  kConnected,          // connected
  kCutVertex,          // no cut vertices
  kRadiusDiameter,     // nontrivial => radius 3, diameter 3 or 4; regular => 3
  kGirth,              // girth in {3,4,5}, or the graph is C7 (or K1)
  kDegreeConsistency,  // sorted |N_{>=3}(v)| equals the sorted degrees
  kMaxDegreeMatch,     // max degree of complement(square(g)) equals g's
};

inline constexpr std::array<Filter, 7> kAllFilters = {
    Filter::kLowDegree,      Filter::kConnected, Filter::kCutVertex,
    Filter::kRadiusDiameter, Filter::kGirth,     Filter::kDegreeConsistency,
    Filter::kMaxDegreeMatch,
};

std::string_view FilterName(Filter f);
std::optional<Filter> ParseFilter(std::string_view name);

struct FilterResult {
  Filter filter;
  bool passed = true;
  std::string detail;
  bool operator==(const FilterResult&) const = default;
};

FilterResult EvaluateFilter(const Graph& g, Filter f);

// kQuick runs low-degree, connected and girth; kLeaf runs every filter.
enum class Stage { kQuick, kLeaf };

std::span<const Filter> StageFilters(Stage stage);

// Passed, or the first failing filter in cheap-first order.
struct FilterVerdict {
  bool passed = true;
  std::optional<Filter> failed;
  std::string detail;
};

FilterVerdict NecessaryFilter(const Graph& g, Stage stage);
FilterVerdict ApplyFilters(const Graph& g, std::span<const Filter> filters);

// In a graph of girth >= 6, the first two distance layers around x are
// independent sets and no two vertices of N_1(x) share a neighbor in N_2(x).
// When called on a graph of smaller girth this may report a violation; the
// witness lists the vertices of the offending configuration.
struct LemmaResult {
  bool holds = true;
  std::vector<int> witness;
  std::string detail;
};

// Throws InputError when x is out of range.
LemmaResult Girth6LocalLemma(const Graph& g, int x);

// Reasons a girth-6 graph g cannot be squco. Each is a discrepancy between g
// and h = complement(square(g)) (or a property every squco graph has) that
// can be re-evaluated from g alone.
enum class WitnessTag {
  kDegreeSequenceMismatch,
  kMaxDegreeExcess,
  kDegreeOneInComplementSquare,
  kCutVertexInComplementSquare,
  kGirthMismatch,
  kRadiusDiameterViolation,
  kSmallOrderExhausted,
  kDegreeTwoCountMismatch,
  kNotIsomorphicFallback,
};

std::string_view WitnessTagName(WitnessTag tag);

// Order up to which every squco graph is known and none has girth 6.
inline constexpr int kExhaustedSqucoOrder = 11;

struct RefutationWitness {
  WitnessTag tag;
  // Tag-dependent: the vertex (or sorted-sequence index) at which the
  // discrepancy shows, and the two values being compared (value in g first).
  int vertex = -1;
  int expected = 0;
  int actual = 0;
  std::string detail;
};

// Precondition: girth(g) == 6, else InputError. Checks, in order:
//   1. sorted degree sequences of g and h differ;
//   2. h has a vertex of degree 1;
//   3. h has a cut vertex;
//   4. g or h violates radius 3 / diameter 3..4, or their diameters differ;
//   5. girth(h) != 6;
//   6. order <= kExhaustedSqucoOrder;
//   7. degree-two vertex counts of g and h differ;
//   8. otherwise a full isomorphism test, which is total.
// Throws std::logic_error if g turns out to be squco.
RefutationWitness RefuteGirth6(const Graph& g);

struct PropertyReport {
  int order = 0;
  int size = 0;
  std::vector<int> degree_sequence;
  int max_degree = 0;
  Girth girth = Girth::Infinite();
  std::optional<int> radius;    // empty when disconnected
  std::optional<int> diameter;  // empty when disconnected
  bool connected = false;
  std::vector<int> cut_vertices;
  bool regular = false;
  bool bipartite = false;
  bool vertex_transitive = false;
  bool squco = false;
  std::vector<FilterResult> filter_results;
  bool operator==(const PropertyReport&) const = default;
};

PropertyReport Report(const Graph& g);

}  // namespace squco

#endif  // SQUCO_SQUCO_H_

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

#ifndef SQUCO_GRAPH_H_
#define SQUCO_GRAPH_H_

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace squco {

// Largest supported order. Every adjacency row fits in one machine word.
inline constexpr int kMaxOrder = 64;

// A set of vertex ids, bit v set iff v is a member.
using VertexSet = std::uint64_t;

inline constexpr VertexSet Bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet FirstVertices(int n) {
  return n >= 64 ? ~VertexSet{0} : Bit(n) - 1;
}
inline int Count(VertexSet s) { return std::popcount(s); }
inline std::vector<int> Members(VertexSet s) {
  std::vector<int> out;
  out.reserve(Count(s));
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

// Simple undirected graph on vertices 0..order()-1 stored as adjacency bit
// rows. Symmetric and loop-free by construction.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices. Throws InputError unless 0 <= n <= kMaxOrder.
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;  // edge count

  VertexSet Vertices() const { return FirstVertices(n_); }
  VertexSet Neighbors(int v) const { return rows_[v]; }
  int Degree(int v) const { return Count(rows_[v]); }
  bool HasEdge(int u, int v) const { return (rows_[u] >> v) & 1; }

  // Adds {u,v}. Duplicate insertions are no-ops. Throws InputError on
  // out-of-range ids or u == v.
  void AddEdge(int u, int v);

  // Copy of this graph with one more vertex (id order()) adjacent to nbrs.
  Graph WithVertex(VertexSet nbrs) const;

  // Graph whose vertex i is vertex perm[i] of this graph.
  Graph Relabeled(std::span<const int> perm) const;

  std::vector<std::pair<int, int>> Edges() const;
  std::string DebugString() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

// Builds a graph from an edge list; duplicates collapse. Throws InputError for
// out-of-range ids and loops.
Graph MakeGraph(int n, std::span<const std::pair<int, int>> edges);
Graph MakeGraph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph Complement(const Graph& g);

// u ~ v in the result iff 1 <= d_g(u,v) <= 2.
Graph Square(const Graph& g);

inline constexpr int kUnreachable = -1;

// BFS distance layers from one source. layers[i] holds the vertices at
// distance exactly i; unreachable vertices are in no layer.
struct DistanceLayers {
  int source = 0;
  std::vector<int> dist;  // kUnreachable for other components
  std::vector<VertexSet> layers;

  VertexSet Layer(int i) const {
    return i < static_cast<int>(layers.size()) ? layers[i] : 0;
  }
  // Vertices at distance >= i, counting unreachable ones.
  VertexSet AtLeast(int i) const;
  int eccentricity() const { return static_cast<int>(layers.size()) - 1; }
  VertexSet reachable() const;
  int order() const { return static_cast<int>(dist.size()); }
};

// Throws InputError if v is out of range.
DistanceLayers BfsLayers(const Graph& g, int v);

// Shortest cycle length, or infinite for forests. Never a sentinel integer.
class Girth {
 public:
  static Girth Infinite() { return Girth(); }
  static Girth Finite(int length) { return Girth(length); }

  bool is_finite() const { return length_.has_value(); }
  // Precondition: is_finite().
  int length() const { return *length_; }
  std::string ToString() const;

  // Infinite compares greater than every finite girth.
  std::strong_ordering operator<=>(const Girth& other) const;
  bool operator==(const Girth& other) const = default;

 private:
  Girth() = default;
  explicit Girth(int length) : length_(length) {}
  std::optional<int> length_;
};

Girth ComputeGirth(const Graph& g);

// Per-vertex truncated BFS; returns true iff g has a cycle of length < bound.
bool HasCycleShorterThan(const Graph& g, int bound);

struct RadiusDiameter {
  int radius = 0;
  int diameter = 0;
  bool operator==(const RadiusDiameter&) const = default;
};

// std::nullopt when g is disconnected. The empty graph counts as connected.
std::optional<RadiusDiameter> ComputeRadiusDiameter(const Graph& g);

struct Biconnectivity {
  bool connected = false;
  VertexSet cut_vertices = 0;
};

Biconnectivity AnalyzeBiconnectivity(const Graph& g);
bool IsConnected(const Graph& g);

// Nonincreasing. Front element is the maximum degree.
std::vector<int> DegreeSequence(const Graph& g);
int MaxDegree(const Graph& g);
bool IsRegular(const Graph& g);
bool IsBipartite(const Graph& g);

}  // namespace squco

#endif  // SQUCO_GRAPH_H_

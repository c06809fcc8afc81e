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

#include "squco/graph.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "squco/errors.h"

namespace squco {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw InputError("graph order " + std::to_string(n) +
                     " outside supported range 0.." +
                     std::to_string(kMaxOrder));
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += Degree(v);
  return twice / 2;
}

void Graph::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has a vertex outside 0.." + std::to_string(n_ - 1));
  }
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  rows_[u] |= Bit(v);
  rows_[v] |= Bit(u);
}

Graph Graph::WithVertex(VertexSet nbrs) const {
  Graph g(n_ + 1);
  g.rows_ = rows_;
  for (int u : Members(nbrs & Vertices())) g.AddEdge(u, n_);
  return g;
}

Graph Graph::Relabeled(std::span<const int> perm) const {
  Graph g(n_);
  std::array<int, kMaxOrder> inverse{};
  for (int i = 0; i < n_; ++i) inverse[perm[i]] = i;
  for (int i = 0; i < n_; ++i) {
    for (VertexSet s = rows_[perm[i]]; s != 0; s &= s - 1) {
      g.rows_[i] |= Bit(inverse[std::countr_zero(s)]);
    }
  }
  return g;
}

std::vector<std::pair<int, int>> Graph::Edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : Members(rows_[u] & ~FirstVertices(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

std::string Graph::DebugString() const {
  std::ostringstream os;
  os << "Graph(" << n_ << "; ";
  bool first = true;
  for (auto [u, v] : Edges()) {
    os << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  os << ")";
  return os.str();
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  return std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

Graph MakeGraph(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.AddEdge(u, v);
  return g;
}

Graph MakeGraph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return MakeGraph(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                           edges.size()));
}

Graph Complement(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int v = 0; v < n; ++v) {
    for (int u : Members(~g.Neighbors(v) & g.Vertices() & ~FirstVertices(v + 1))) {
      h.AddEdge(u, v);
    }
  }
  return h;
}

Graph Square(const Graph& g) {
  const int n = g.order();
  Graph h(n);
  for (int v = 0; v < n; ++v) {
    VertexSet reach = g.Neighbors(v);
    for (VertexSet s = g.Neighbors(v); s != 0; s &= s - 1) {
      reach |= g.Neighbors(std::countr_zero(s));
    }
    for (int u : Members(reach & ~FirstVertices(v + 1))) h.AddEdge(u, v);
  }
  return h;
}

VertexSet DistanceLayers::AtLeast(int i) const {
  VertexSet out = FirstVertices(order()) & ~reachable();
  for (int j = std::max(i, 0); j < static_cast<int>(layers.size()); ++j) {
    out |= layers[j];
  }
  return out;
}

VertexSet DistanceLayers::reachable() const {
  VertexSet out = 0;
  for (VertexSet layer : layers) out |= layer;
  return out;
}

DistanceLayers BfsLayers(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range");
  }
  DistanceLayers out;
  out.source = v;
  out.dist.assign(g.order(), kUnreachable);
  VertexSet seen = Bit(v);
  VertexSet frontier = Bit(v);
  for (int d = 0; frontier != 0; ++d) {
    out.layers.push_back(frontier);
    VertexSet next = 0;
    for (VertexSet s = frontier; s != 0; s &= s - 1) {
      const int u = std::countr_zero(s);
      out.dist[u] = d;
      next |= g.Neighbors(u);
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return out;
}

std::string Girth::ToString() const {
  return is_finite() ? std::to_string(*length_) : "inf";
}

std::strong_ordering Girth::operator<=>(const Girth& other) const {
  if (is_finite() != other.is_finite()) {
    return is_finite() ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  }
  if (!is_finite()) return std::strong_ordering::equal;
  return *length_ <=> *other.length_;
}

namespace {

// Length of the shortest cycle found by a BFS from root, or 'bound' if none
// shorter than bound. Only cycles whose length is below bound are reported
// exactly; the overall minimum over all roots is the girth.
int ShortestCycleFrom(const Graph& g, int root, int bound) {
  std::array<int, kMaxOrder> dist;
  std::array<int, kMaxOrder> parent;
  dist.fill(-1);
  std::array<int, kMaxOrder> queue;
  int head = 0;
  int tail = 0;
  queue[tail++] = root;
  dist[root] = 0;
  parent[root] = -1;
  int best = bound;
  while (head < tail) {
    const int u = queue[head++];
    if (2 * dist[u] + 1 >= best) break;
    for (VertexSet s = g.Neighbors(u); s != 0; s &= s - 1) {
      const int w = std::countr_zero(s);
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue[tail++] = w;
      } else if (w != parent[u]) {
        best = std::min(best, dist[u] + dist[w] + 1);
      }
    }
  }
  return best;
}

}  // namespace

Girth ComputeGirth(const Graph& g) {
  constexpr int kNone = kMaxOrder + 1;
  int best = kNone;
  for (int v = 0; v < g.order(); ++v) {
    best = std::min(best, ShortestCycleFrom(g, v, best));
    if (best == 3) break;
  }
  return best == kNone ? Girth::Infinite() : Girth::Finite(best);
}

bool HasCycleShorterThan(const Graph& g, int bound) {
  for (int v = 0; v < g.order(); ++v) {
    if (ShortestCycleFrom(g, v, bound) < bound) return true;
  }
  return false;
}

std::optional<RadiusDiameter> ComputeRadiusDiameter(const Graph& g) {
  const int n = g.order();
  if (n == 0) return RadiusDiameter{};
  RadiusDiameter rd{n, 0};
  for (int v = 0; v < n; ++v) {
    DistanceLayers layers = BfsLayers(g, v);
    if (layers.reachable() != g.Vertices()) return std::nullopt;
    rd.radius = std::min(rd.radius, layers.eccentricity());
    rd.diameter = std::max(rd.diameter, layers.eccentricity());
  }
  return rd;
}

bool IsConnected(const Graph& g) {
  return g.order() == 0 || BfsLayers(g, 0).reachable() == g.Vertices();
}

Biconnectivity AnalyzeBiconnectivity(const Graph& g) {
  Biconnectivity out;
  out.connected = IsConnected(g);
  const int n = g.order();
  std::array<int, kMaxOrder> disc;
  std::array<int, kMaxOrder> low;
  disc.fill(-1);
  int clock = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = clock++;
    int children = 0;
    for (VertexSet s = g.Neighbors(u); s != 0; s &= s - 1) {
      const int w = std::countr_zero(s);
      if (disc[w] < 0) {
        ++children;
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent >= 0 && low[w] >= disc[u]) out.cut_vertices |= Bit(u);
      } else if (w != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent < 0 && children > 1) out.cut_vertices |= Bit(u);
  };
  for (int v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, -1);
  }
  return out;
}

std::vector<int> DegreeSequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (int v = 0; v < g.order(); ++v) out[v] = g.Degree(v);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int MaxDegree(const Graph& g) {
  int k = 0;
  for (int v = 0; v < g.order(); ++v) k = std::max(k, g.Degree(v));
  return k;
}

bool IsRegular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.Degree(v) != g.Degree(0)) return false;
  }
  return true;
}

bool IsBipartite(const Graph& g) {
  VertexSet unseen = g.Vertices();
  while (unseen != 0) {
    DistanceLayers layers = BfsLayers(g, std::countr_zero(unseen));
    VertexSet even = 0;
    VertexSet odd = 0;
    for (std::size_t i = 0; i < layers.layers.size(); ++i) {
      (i % 2 == 0 ? even : odd) |= layers.layers[i];
    }
    for (int v : Members(even)) {
      if (g.Neighbors(v) & even) return false;
    }
    for (int v : Members(odd)) {
      if (g.Neighbors(v) & odd) return false;
    }
    unseen &= ~(even | odd);
  }
  return true;
}

}  // namespace squco

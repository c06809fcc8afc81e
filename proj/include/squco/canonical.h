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

#ifndef SQUCO_CANONICAL_H_
#define SQUCO_CANONICAL_H_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "squco/graph.h"

namespace squco {

// Canonical encoding of a graph: one byte holding the order, then the upper
// triangle of the canonically relabeled adjacency matrix, row-major, packed
// MSB-first. Two graphs share a certificate iff they are isomorphic.
struct Certificate {
  std::string bytes;

  auto operator<=>(const Certificate&) const = default;
  std::string ToHex() const;
  static Certificate FromHex(const std::string& hex);
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const {
    return std::hash<std::string>{}(c.bytes);
  }
};

// Automorphism orbits. representative[v] is the smallest vertex in v's orbit.
struct OrbitPartition {
  std::vector<int> representative;

  bool SameOrbit(int u, int v) const {
    return representative[u] == representative[v];
  }
  int NumOrbits() const;
};

struct CanonicalForm {
  Certificate certificate;
  // labeling[i] is the vertex placed at canonical position i.
  std::vector<int> labeling;
  OrbitPartition orbits;
  // Generators of the automorphism group found during the search.
  std::vector<std::vector<int>> generators;
};

// Partition refinement with individualization and automorphism pruning.
// Target cell is the first smallest non-singleton cell. The orbit partition is
// exact, not an approximation.
CanonicalForm Canonicalize(const Graph& g);

Certificate CertificateOf(const Graph& g);

// Inverse of the certificate encoding: the canonical representative.
Graph GraphFromCertificate(const Certificate& c);

// The canonical representative g relabeled by its canonical labeling.
Graph CanonicalGraph(const Graph& g);

bool AreIsomorphic(const Graph& g, const Graph& h);

bool IsVertexTransitive(const Graph& g);

}  // namespace squco

#endif  // SQUCO_CANONICAL_H_

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

#ifndef SQUCO_SRC_PARTITION_H_
#define SQUCO_SRC_PARTITION_H_

#include <array>
#include <bit>
#include <cstdint>

#include "squco/canonical.h"
#include "squco/graph.h"

namespace squco::internal {

// Ordered partition of the vertex set, nauty style. lab lists the vertices
// position by position; a cell is a maximal run of positions starting at a
// set bit of 'starts'. Cells only ever split in place, so the position of a
// vertex within the root partition bounds its final canonical position.
struct Partition {
  int n = 0;
  int cells = 0;
  std::uint64_t starts = 0;
  std::array<std::uint8_t, kMaxOrder> lab{};
  std::array<std::uint8_t, kMaxOrder> pos{};
  std::array<std::uint8_t, kMaxOrder> cell_end{};  // valid at cell starts

  bool discrete() const { return cells == n; }

  int CellStartOf(int position) const {
    const std::uint64_t upto =
        position >= 63 ? ~std::uint64_t{0} : (std::uint64_t{2} << position) - 1;
    return 63 - std::countl_zero(starts & upto);
  }
  int LastCellStart() const { return 63 - std::countl_zero(starts); }

  VertexSet CellMembers(int start) const {
    VertexSet out = 0;
    for (int i = start; i < cell_end[start]; ++i) out |= Bit(lab[i]);
    return out;
  }
};

Partition UnitPartition(int n);

// Refines p to the coarsest equitable partition finer than it, using the
// cells whose start positions are set in 'active' as the initial splitters.
// Fragments are ordered by increasing neighbor count, so the result depends
// only on the graph and the ordered input partition.
void Refine(const Graph& g, Partition& p, std::uint64_t active);

// Splits v off the front of its cell; returns the start of the new singleton.
int Individualize(Partition& p, int v);

// Equitable refinement of the unit partition.
Partition RootPartition(const Graph& g);

// Canonical form search starting from an already refined root partition.
CanonicalForm CanonicalizeFromRoot(const Graph& g, const Partition& root);

}  // namespace squco::internal

#endif  // SQUCO_SRC_PARTITION_H_

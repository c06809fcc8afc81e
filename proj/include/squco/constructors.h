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

#ifndef SQUCO_CONSTRUCTORS_H_
#define SQUCO_CONSTRUCTORS_H_

#include <string>
#include <string_view>
#include <vector>

#include "squco/graph.h"

namespace squco {

// C_n(S): vertex i adjacent to i +- s (mod n) for each s in S.
// Steps must be distinct with 1 <= s <= n/2.
struct CirculantSpec {
  int order = 0;
  std::vector<int> connection_set;
};

// LCF notation [halfsteps]^repeats: a Hamiltonian cycle 0..N-1 plus a chord
// from i to i + halfsteps[i mod len] (mod N). The chords must pair up into a
// perfect matching, so the result is cubic.
struct LcfSpec {
  std::vector<int> halfsteps;
  int repeats = 1;
};

Graph Circulant(const CirculantSpec& spec);
Graph Lcf(const LcfSpec& spec);

Graph CycleGraph(int n);
Graph PathGraph(int n);
Graph CompleteGraph(int n);

// k1, c<n>, franklin, c41-squco, heawood, complete<n>, path<n>.
// Throws InputError for anything else.
Graph Named(std::string_view name);

// Franklin graph as LCF [5,-5]^6. Checked against the squco property the
// first time it is built; a failed check throws std::logic_error.
Graph FranklinGraph();
// Heawood graph, LCF [5,-5]^7.
Graph HeawoodGraph();
// C_41({4,5,8,10}).
Graph SqucoCirculant41();

}  // namespace squco

#endif  // SQUCO_CONSTRUCTORS_H_

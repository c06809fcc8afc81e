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

#include "squco/constructors.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

#include "squco/errors.h"
#include "squco/squco.h"

namespace squco {

Graph Circulant(const CirculantSpec& spec) {
  const int n = spec.order;
  if (n < 1 || n > kMaxOrder) {
    throw InputError("circulant order " + std::to_string(n) + " out of range");
  }
  std::set<int> seen;
  for (int s : spec.connection_set) {
    if (s < 1 || 2 * s > n) {
      throw InputError("circulant step " + std::to_string(s) +
                       " outside 1.." + std::to_string(n / 2));
    }
    if (!seen.insert(s).second) {
      throw InputError("duplicate circulant step " + std::to_string(s));
    }
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int s : spec.connection_set) g.AddEdge(i, (i + s) % n);
  }
  return g;
}

Graph Lcf(const LcfSpec& spec) {
  if (spec.halfsteps.empty() || spec.repeats < 1) {
    throw InputError("LCF spec needs at least one step and one repeat");
  }
  const long total = static_cast<long>(spec.halfsteps.size()) * spec.repeats;
  if (total < 4 || total > kMaxOrder) {
    throw InputError("LCF order " + std::to_string(total) + " out of range");
  }
  const int n = static_cast<int>(total);
  std::vector<int> partner(n);
  for (int i = 0; i < n; ++i) {
    const int step = spec.halfsteps[i % spec.halfsteps.size()];
    partner[i] = ((i + step) % n + n) % n;
    const int gap = std::min((partner[i] - i + n) % n, (i - partner[i] + n) % n);
    if (gap <= 1) {
      throw InputError("LCF chord at vertex " + std::to_string(i) +
                       " is a loop or duplicates a cycle edge");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (partner[partner[i]] != i) {
      throw InputError("LCF chord collision at vertex " +
                       std::to_string(partner[i]) + " (degree would exceed 3)");
    }
  }
  Graph g = CycleGraph(n);
  for (int i = 0; i < n; ++i) g.AddEdge(i, partner[i]);
  return g;
}

Graph CycleGraph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Graph PathGraph(int n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.AddEdge(i, i + 1);
  return g;
}

Graph CompleteGraph(int n) { return Complement(Graph(n)); }

Graph FranklinGraph() {
  static const Graph franklin = [] {
    Graph g = Lcf({{5, -5}, 6});
    if (!IsSquco(g) || ComputeGirth(g) != Girth::Finite(4)) {
      throw std::logic_error("LCF [5,-5]^6 failed the Franklin graph self-check");
    }
    return g;
  }();
  return franklin;
}

Graph HeawoodGraph() { return Lcf({{5, -5}, 7}); }

Graph SqucoCirculant41() { return Circulant({41, {4, 5, 8, 10}}); }

namespace {

// Parses the decimal suffix of name after prefix, or -1.
int SuffixNumber(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) {
    return -1;
  }
  std::string_view digits = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return -1;
  return value;
}

}  // namespace

Graph Named(std::string_view name) {
  if (name == "k1") return Graph(1);
  if (name == "franklin") return FranklinGraph();
  if (name == "c41-squco") return SqucoCirculant41();
  if (name == "heawood") return HeawoodGraph();
  if (int n = SuffixNumber(name, "complete"); n >= 1) return CompleteGraph(n);
  if (int n = SuffixNumber(name, "path"); n >= 1) return PathGraph(n);
  if (int n = SuffixNumber(name, "c"); n >= 3) return CycleGraph(n);
  throw InputError("unknown graph name '" + std::string(name) +
                   "' (expected k1, c<n>, franklin, c41-squco, heawood, "
                   "complete<n>, path<n>)");
}

}  // namespace squco

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

#include "squco/canonical.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "partition.h"
#include "squco/errors.h"

namespace squco {
namespace internal {

Partition UnitPartition(int n) {
  Partition p;
  p.n = n;
  p.cells = n > 0 ? 1 : 0;
  p.starts = n > 0 ? 1 : 0;
  for (int i = 0; i < n; ++i) {
    p.lab[i] = static_cast<std::uint8_t>(i);
    p.pos[i] = static_cast<std::uint8_t>(i);
  }
  if (n > 0) p.cell_end[0] = static_cast<std::uint8_t>(n);
  return p;
}

void Refine(const Graph& g, Partition& p, std::uint64_t active) {
  std::array<std::uint8_t, kMaxOrder> count;
  std::array<std::uint8_t, kMaxOrder> vertex;
  while (active != 0 && !p.discrete()) {
    const int s = std::countr_zero(active);
    active &= active - 1;
    const VertexSet splitter = p.CellMembers(s);
    std::uint64_t remaining = p.starts;
    while (remaining != 0) {
      const int t = std::countr_zero(remaining);
      const int e = p.cell_end[t];
      remaining &= e >= 64 ? 0 : (~std::uint64_t{0} << e);
      const int len = e - t;
      if (len == 1) continue;
      bool uneven = false;
      for (int i = 0; i < len; ++i) {
        vertex[i] = p.lab[t + i];
        count[i] = static_cast<std::uint8_t>(
            std::popcount(g.Neighbors(vertex[i]) & splitter));
        uneven |= count[i] != count[0];
      }
      if (!uneven) continue;
      // Stable insertion sort by count.
      for (int i = 1; i < len; ++i) {
        const std::uint8_t c = count[i];
        const std::uint8_t v = vertex[i];
        int j = i;
        for (; j > 0 && count[j - 1] > c; --j) {
          count[j] = count[j - 1];
          vertex[j] = vertex[j - 1];
        }
        count[j] = c;
        vertex[j] = v;
      }
      std::uint64_t fresh = 0;
      int largest = t;
      int largest_size = 0;
      for (int i = 0; i < len;) {
        int j = i;
        while (j < len && count[j] == count[i]) {
          p.lab[t + j] = vertex[j];
          p.pos[vertex[j]] = static_cast<std::uint8_t>(t + j);
          ++j;
        }
        p.cell_end[t + i] = static_cast<std::uint8_t>(t + j);
        fresh |= std::uint64_t{1} << (t + i);
        if (j - i > largest_size) {
          largest_size = j - i;
          largest = t + i;
        }
        i = j;
      }
      p.cells += std::popcount(fresh) - 1;
      p.starts |= fresh;
      if ((active >> t) & 1) {
        active |= fresh;
      } else {
        active |= fresh & ~(std::uint64_t{1} << largest);
      }
    }
  }
}

int Individualize(Partition& p, int v) {
  const int t = p.CellStartOf(p.pos[v]);
  const int e = p.cell_end[t];
  const int at = p.pos[v];
  const std::uint8_t displaced = p.lab[t];
  p.lab[at] = displaced;
  p.pos[displaced] = static_cast<std::uint8_t>(at);
  p.lab[t] = static_cast<std::uint8_t>(v);
  p.pos[v] = static_cast<std::uint8_t>(t);
  p.cell_end[t] = static_cast<std::uint8_t>(t + 1);
  p.cell_end[t + 1] = static_cast<std::uint8_t>(e);
  p.starts |= std::uint64_t{1} << (t + 1);
  ++p.cells;
  return t;
}

Partition RootPartition(const Graph& g) {
  Partition p = UnitPartition(g.order());
  if (g.order() > 0) Refine(g, p, 1);
  return p;
}

namespace {

using Perm = std::array<std::uint8_t, kMaxOrder>;
using Rows = std::array<std::uint64_t, kMaxOrder>;

struct UnionFind {
  std::array<std::uint8_t, kMaxOrder> parent;

  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int Find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = static_cast<std::uint8_t>(b);  // smaller id is the root
  }
};

struct Leaf {
  Perm lab{};
  Rows rows{};
  std::vector<std::uint8_t> path;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm Run(const Partition& root) {
    Partition p = root;
    Search(p, 0);
    return Finish();
  }

 private:
  int Search(Partition& p, int level) {
    if (p.discrete()) return ProcessLeaf(p, level);

    // First smallest non-singleton cell.
    int target = -1;
    int target_size = kMaxOrder + 1;
    for (std::uint64_t s = p.starts; s != 0; s &= s - 1) {
      const int t = std::countr_zero(s);
      const int size = p.cell_end[t] - t;
      if (size > 1 && size < target_size) {
        target = t;
        target_size = size;
      }
    }
    const VertexSet cell = p.CellMembers(target);

    VertexSet explored = 0;
    std::size_t autos_seen = 0;
    UnionFind orbits(n_);
    for (VertexSet rest = cell; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (explored != 0) {
        if (autos_.size() != autos_seen) {
          orbits = StabilizerOrbits(level);
          autos_seen = autos_.size();
        }
        bool redundant = false;
        for (VertexSet e = explored; e != 0; e &= e - 1) {
          if (orbits.Find(std::countr_zero(e)) == orbits.Find(w)) {
            redundant = true;
            break;
          }
        }
        if (redundant) continue;
      }
      explored |= Bit(w);
      Partition child = p;
      const int start = Individualize(child, w);
      Refine(g_, child, std::uint64_t{1} << start);
      path_.push_back(static_cast<std::uint8_t>(w));
      const int resume = Search(child, level + 1);
      path_.pop_back();
      if (resume < level) return resume;
    }
    return level - 1;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // first 'level' vertices of the current path pointwise.
  UnionFind StabilizerOrbits(int level) {
    UnionFind uf(n_);
    for (const Perm& gamma : autos_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) {
        fixes = gamma[path_[i]] == path_[i];
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) uf.Union(v, gamma[v]);
    }
    return uf;
  }

  void ComputeRows(const Partition& p, Rows& rows) const {
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (VertexSet s = g_.Neighbors(p.lab[i]); s != 0; s &= s - 1) {
        r |= std::uint64_t{1} << p.pos[std::countr_zero(s)];
      }
      rows[i] = r;
    }
  }

  int Compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  int CommonPrefix(const std::vector<std::uint8_t>& other) const {
    std::size_t i = 0;
    while (i < path_.size() && i < other.size() && path_[i] == other[i]) ++i;
    return static_cast<int>(i);
  }

  void RecordAutomorphism(const Perm& from, const Partition& to) {
    Perm gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to.lab[i];
    autos_.push_back(gamma);
  }

  int ProcessLeaf(const Partition& p, int level) {
    ComputeRows(p, rows_);
    if (!have_first_) {
      have_first_ = true;
      first_.lab = p.lab;
      first_.rows = rows_;
      first_.path = path_;
      best_ = first_;
      return level - 1;
    }
    if (Compare(rows_, first_.rows) == 0) {
      RecordAutomorphism(first_.lab, p);
      return CommonPrefix(first_.path);
    }
    const int cmp = Compare(rows_, best_.rows);
    if (cmp == 0) {
      RecordAutomorphism(best_.lab, p);
      return CommonPrefix(best_.path);
    }
    if (cmp > 0) {
      best_.lab = p.lab;
      best_.rows = rows_;
      best_.path = path_;
    }
    return level - 1;
  }

  CanonicalForm Finish() const {
    CanonicalForm out;
    out.labeling.resize(n_);
    for (int i = 0; i < n_; ++i) out.labeling[i] = best_.lab[i];

    std::string& bytes = out.certificate.bytes;
    bytes.assign(1 + (n_ * (n_ - 1) / 2 + 7) / 8, '\0');
    bytes[0] = static_cast<char>(n_);
    int bit = 0;
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j, ++bit) {
        if ((best_.rows[i] >> j) & 1) {
          bytes[1 + bit / 8] =
              static_cast<char>(bytes[1 + bit / 8] | (0x80 >> (bit % 8)));
        }
      }
    }

    UnionFind uf(n_);
    for (const Perm& gamma : autos_) {
      for (int v = 0; v < n_; ++v) uf.Union(v, gamma[v]);
      out.generators.emplace_back(gamma.begin(), gamma.begin() + n_);
    }
    out.orbits.representative.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbits.representative[v] = uf.Find(v);
    return out;
  }

  const Graph& g_;
  const int n_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  Rows rows_{};
  std::vector<std::uint8_t> path_;
  std::vector<Perm> autos_;
};

}  // namespace

CanonicalForm CanonicalizeFromRoot(const Graph& g, const Partition& root) {
  return Canonizer(g).Run(root);
}

}  // namespace internal

std::string Certificate::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

Certificate Certificate::FromHex(const std::string& hex) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw InputError("bad hex digit in certificate: " + hex);
  };
  if (hex.size() % 2 != 0) throw InputError("odd-length certificate hex");
  Certificate c;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    c.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  return c;
}

int OrbitPartition::NumOrbits() const {
  int count = 0;
  for (std::size_t v = 0; v < representative.size(); ++v) {
    if (representative[v] == static_cast<int>(v)) ++count;
  }
  return count;
}

CanonicalForm Canonicalize(const Graph& g) {
  return internal::CanonicalizeFromRoot(g, internal::RootPartition(g));
}

Certificate CertificateOf(const Graph& g) { return Canonicalize(g).certificate; }

Graph GraphFromCertificate(const Certificate& c) {
  if (c.bytes.empty()) throw InputError("empty certificate");
  const int n = static_cast<unsigned char>(c.bytes[0]);
  Graph g(n);
  const std::size_t expected = 1 + (n * (n - 1) / 2 + 7) / 8;
  if (c.bytes.size() != expected) throw InputError("certificate length mismatch");
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (static_cast<unsigned char>(c.bytes[1 + bit / 8]) & (0x80 >> (bit % 8))) {
        g.AddEdge(i, j);
      }
    }
  }
  return g;
}

Graph CanonicalGraph(const Graph& g) {
  return g.Relabeled(Canonicalize(g).labeling);
}

namespace {

std::vector<int> TriangleCounts(const Graph& g) {
  std::vector<int> out(g.order());
  for (int v = 0; v < g.order(); ++v) {
    int twice = 0;
    for (int u : Members(g.Neighbors(v))) {
      twice += Count(g.Neighbors(u) & g.Neighbors(v));
    }
    out[v] = twice / 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool AreIsomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (DegreeSequence(g) != DegreeSequence(h)) return false;
  if (TriangleCounts(g) != TriangleCounts(h)) return false;
  return CertificateOf(g) == CertificateOf(h);
}

bool IsVertexTransitive(const Graph& g) {
  return g.order() <= 1 || Canonicalize(g).orbits.NumOrbits() == 1;
}

}  // namespace squco

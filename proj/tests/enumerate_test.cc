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

#include "squco/enumerate.h"

#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "squco/constructors.h"
#include "squco/errors.h"

namespace squco {
namespace {

SearchConfig Orders(int lo, int hi) {
  SearchConfig c;
  c.min_order = lo;
  c.max_order = hi;
  return c;
}

std::set<Certificate> CertificatesOf(const std::vector<Graph>& graphs) {
  std::set<Certificate> out;
  for (const Graph& g : graphs) out.insert(CertificateOf(g));
  return out;
}

std::set<Certificate> AcceptedAtOrder(const SearchSummary& s, int n) {
  std::set<Certificate> out;
  for (const Certificate& c : s.accepted) {
    if (static_cast<unsigned char>(c.bytes[0]) == n) out.insert(c);
  }
  return out;
}

TEST(EnumerateTest, UnprunedCountsMatchOracle) {
  const SearchSummary s = Enumerate(Orders(1, 6));
  const std::vector<std::uint64_t> expected = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(s.per_order.at(n).generated, expected[n - 1]);
    EXPECT_EQ(s.per_order.at(n).accepted, expected[n - 1]);
    const auto oracle = oracle::BruteClasses(n, [](const Graph&) { return true; });
    EXPECT_EQ(oracle.size(), expected[n - 1]);
    EXPECT_EQ(AcceptedAtOrder(s, n), CertificatesOf(oracle)) << "order " << n;
  }
  EXPECT_TRUE(s.complete);
}

TEST(EnumerateTest, ConnectedFilterCounts) {
  SearchConfig c = Orders(1, 5);
  c.filters = {Filter::kConnected};
  const SearchSummary s = Enumerate(c);
  const std::vector<std::uint64_t> expected = {1, 1, 2, 6, 21};
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(s.per_order.at(n).accepted, expected[n - 1]);
    EXPECT_EQ(AcceptedAtOrder(s, n),
              CertificatesOf(oracle::BruteClasses(n, [](const Graph& g) { return IsConnected(g); })));
  }
  EXPECT_EQ(s.rejections.at("connected"), 1u + 2 + 5 + 13);
}

TEST(EnumerateTest, GirthPruneIsSound) {
  for (int girth = 4; girth <= 6; ++girth) {
    SearchConfig c = Orders(1, 6);
    c.min_girth = girth;
    const SearchSummary s = Enumerate(c);
    for (int n = 1; n <= 6; ++n) {
      const auto oracle = oracle::BruteClasses(n, [girth](const Graph& g) {
        const int shortest = oracle::ShortestCycleByEnumeration(g);
        return shortest == 0 || shortest >= girth;
      });
      EXPECT_EQ(AcceptedAtOrder(s, n), CertificatesOf(oracle)) << "girth " << girth << " n " << n;
    }
  }
}

TEST(EnumerateTest, DegreeCapIsSound) {
  SearchConfig c = Orders(1, 6);
  c.max_degree = 2;
  const SearchSummary s = Enumerate(c);
  for (int n = 1; n <= 6; ++n) {
    const auto oracle =
        oracle::BruteClasses(n, [](const Graph& g) { return MaxDegree(g) <= 2; });
    EXPECT_EQ(AcceptedAtOrder(s, n), CertificatesOf(oracle)) << n;
  }
}

TEST(EnumerateTest, MaxGirthLeafCheck) {
  SearchConfig c = Orders(3, 6);
  c.min_girth = 4;
  c.max_girth = 4;
  const SearchSummary s = Enumerate(c);
  for (const Graph& g : AcceptedGraphs(s)) EXPECT_EQ(ComputeGirth(g), Girth::Finite(4));
  // Forests and C5, C6 and the other larger-girth graphs are rejected.
  EXPECT_GT(s.rejections.at("max-girth"), 0u);
}

TEST(EnumerateTest, IsomorphFreeAtOrderEight) {
  const SearchSummary s = Enumerate(Orders(8, 8));
  EXPECT_EQ(s.per_order.at(8).generated, 12346u);
  std::set<Certificate> distinct(s.accepted.begin(), s.accepted.end());
  EXPECT_EQ(distinct.size(), s.accepted.size());
  EXPECT_TRUE(std::is_sorted(s.accepted.begin(), s.accepted.end()));
}

TEST(EnumerateTest, SqucoAtOrderSevenIsTheSevenCycle) {
  SearchConfig c = Orders(7, 7);
  c.squco_check = true;
  const SearchSummary s = Enumerate(c);
  ASSERT_EQ(s.accepted.size(), 1u);
  EXPECT_EQ(s.accepted[0], CertificateOf(CycleGraph(7)));
}

TEST(EnumerateTest, SqucoUpToSevenWithFilters) {
  SearchConfig c = Orders(1, 7);
  c.filters.assign(kAllFilters.begin(), kAllFilters.end());
  c.squco_check = true;
  const SearchSummary s = Enumerate(c);
  EXPECT_EQ(s.accepted, (std::vector<Certificate>{CertificateOf(Graph(1)),
                                                  CertificateOf(CycleGraph(7))}));
}

// Girth >= 6 includes C7, which is squco; girth exactly 6 yields nothing.
TEST(EnumerateTest, LargeGirthSqucoSearch) {
  SearchConfig c = Orders(6, 12);
  c.min_girth = 6;
  c.squco_check = true;
  SearchSummary s = Enumerate(c);
  EXPECT_EQ(s.accepted, std::vector<Certificate>{CertificateOf(CycleGraph(7))});
  c.max_girth = 6;
  s = Enumerate(c);
  EXPECT_TRUE(s.accepted.empty());
  EXPECT_GT(s.per_order.at(12).generated, 0u);
}

TEST(EnumerateTest, DeterministicAcrossWorkerCounts) {
  SearchConfig c = Orders(5, 8);
  c.filters = {Filter::kConnected, Filter::kCutVertex};
  const SearchSummary one = Enumerate(c);
  c.jobs = 4;
  const SearchSummary four = Enumerate(c);
  EXPECT_TRUE(one.SameResults(four));
  EXPECT_EQ(one.branches_total, four.branches_total);
}

TEST(EnumerateTest, VisitorSeesEveryAcceptedGraphInOrder) {
  SearchConfig c = Orders(1, 7);
  c.squco_check = true;
  std::vector<Graph> seen;
  const SearchSummary s = Enumerate(c, [&](const Graph& g, const PropertyReport& r) {
    EXPECT_TRUE(r.squco);
    EXPECT_EQ(r.order, g.order());
    seen.push_back(g);
  });
  EXPECT_EQ(seen, AcceptedGraphs(s));
  EXPECT_EQ(seen.size(), 2u);
}

TEST(EnumerateTest, StopAfterBranchesLeavesSummaryIncomplete) {
  SearchConfig c = Orders(1, 7);
  c.stop_after_branches = 3;
  const SearchSummary s = Enumerate(c);
  EXPECT_FALSE(s.complete);
  EXPECT_EQ(s.branches_completed, 3u);
  EXPECT_GT(s.branches_total, 3u);
}

TEST(EnumerateTest, RejectsInvalidConfigs) {
  EXPECT_THROW(Enumerate(Orders(0, 3)), InputError);
  EXPECT_THROW(Enumerate(Orders(4, 3)), InputError);
  EXPECT_THROW(Enumerate(Orders(1, kMaxOrder + 1)), InputError);
  SearchConfig c = Orders(1, 3);
  c.min_girth = 2;
  EXPECT_THROW(Enumerate(c), InputError);
}

TEST(SearchConfigTest, DigestIgnoresExecutionSettings) {
  SearchConfig a = Orders(1, 9);
  a.min_girth = 5;
  SearchConfig b = a;
  b.jobs = 8;
  b.checkpoint = "/tmp/x";
  b.stop_after_branches = 2;
  EXPECT_EQ(a.Digest(), b.Digest());
  b.squco_check = true;
  EXPECT_NE(a.Digest(), b.Digest());
  EXPECT_EQ(a.CanonicalText(), "orders=1..9;min_girth=5;max_girth=-;max_degree=-;filters=;squco=0");
}

}  // namespace
}  // namespace squco

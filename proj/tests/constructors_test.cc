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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "squco/canonical.h"
#include "squco/errors.h"
#include "squco/graph6.h"
#include "squco/squco.h"

namespace squco {
namespace {

TEST(CirculantTest, Examples) {
  EXPECT_EQ(Circulant({7, {1}}), CycleGraph(7));
  EXPECT_EQ(Circulant({6, {1, 2, 3}}), CompleteGraph(6));
  const Graph c41 = Circulant({41, {4, 5, 8, 10}});
  EXPECT_EQ(c41.order(), 41);
  EXPECT_EQ(DegreeSequence(c41), std::vector<int>(41, 8));
  EXPECT_EQ(ComputeGirth(c41), Girth::Finite(3));
}

TEST(CirculantTest, RejectsInvalidConnectionSets) {
  EXPECT_THROW(Circulant({7, {4}}), InputError);
  EXPECT_THROW(Circulant({7, {0}}), InputError);
  EXPECT_THROW(Circulant({7, {1, 1}}), InputError);
  EXPECT_THROW(Circulant({0, {}}), InputError);
}

TEST(CirculantTest, AlwaysVertexTransitive) {
  for (int n = 3; n <= 16; ++n) {
    for (int mask = 1; mask < (1 << (n / 2)); ++mask) {
      std::vector<int> steps;
      for (int s = 1; s <= n / 2; ++s) {
        if ((mask >> (s - 1)) & 1) steps.push_back(s);
      }
      EXPECT_TRUE(IsVertexTransitive(Circulant({n, steps}))) << n << " " << mask;
    }
  }
}

TEST(LcfTest, FranklinCandidate) {
  const Graph g = Lcf({{5, -5}, 6});
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(DegreeSequence(g), std::vector<int>(12, 3));
  EXPECT_TRUE(IsBipartite(g));
  EXPECT_EQ(ComputeGirth(g), Girth::Finite(4));
  EXPECT_TRUE(IsVertexTransitive(g));
  EXPECT_TRUE(IsSquco(g));
}

TEST(LcfTest, CubeCandidate) {
  const Graph q3 = Lcf({{3, -3}, 4});
  EXPECT_EQ(q3.order(), 8);
  EXPECT_EQ(DegreeSequence(q3), std::vector<int>(8, 3));
  EXPECT_TRUE(IsBipartite(q3));
  EXPECT_EQ(ComputeGirth(q3), Girth::Finite(4));
  // The 3-cube: vertices are 3-bit words, edges flip one bit.
  Graph cube(8);
  for (int v = 0; v < 8; ++v) {
    for (int b = 0; b < 3; ++b) {
      if (v < (v ^ (1 << b))) cube.AddEdge(v, v ^ (1 << b));
    }
  }
  EXPECT_TRUE(oracle::BruteIsomorphic(q3, cube));
}

TEST(LcfTest, InvalidSpecs) {
  // [2]^4 is K4, which is a valid cubic graph.
  EXPECT_EQ(Lcf({{2}, 4}), CompleteGraph(4));
  // Chord targets do not pair up: vertex 2 would receive two chords.
  EXPECT_THROW(Lcf({{2}, 5}), InputError);
  EXPECT_THROW(Lcf({{1}, 6}), InputError);
  EXPECT_THROW(Lcf({{0}, 6}), InputError);
  EXPECT_THROW(Lcf({{}, 6}), InputError);
}

TEST(NamedTest, KnownNames) {
  EXPECT_EQ(Named("c7"), CycleGraph(7));
  EXPECT_EQ(Named("k1"), Graph(1));
  EXPECT_EQ(Named("complete5"), CompleteGraph(5));
  EXPECT_EQ(Named("path3"), MakeGraph(3, {{0, 1}, {1, 2}}));
  const Graph franklin = Named("franklin");
  EXPECT_TRUE(IsSquco(franklin));
  EXPECT_EQ(ComputeGirth(franklin), Girth::Finite(4));
  const Graph c41 = Named("c41-squco");
  EXPECT_TRUE(IsSquco(c41));
  EXPECT_EQ(ComputeGirth(c41), Girth::Finite(3));
  const Graph heawood = Named("heawood");
  EXPECT_EQ(heawood.order(), 14);
  EXPECT_EQ(ComputeGirth(heawood), Girth::Finite(6));
  EXPECT_TRUE(IsVertexTransitive(heawood));
}

TEST(NamedTest, UnknownNames) {
  EXPECT_THROW(Named("petersen"), InputError);
  EXPECT_THROW(Named("c2"), InputError);
  EXPECT_THROW(Named("c"), InputError);
  EXPECT_THROW(Named("c7x"), InputError);
  EXPECT_THROW(Named("complete99"), InputError);
}

TEST(Graph6Test, HandEncodedExamples) {
  EXPECT_EQ(EncodeGraph6(Graph(1)), "@");
  EXPECT_EQ(EncodeGraph6(CompleteGraph(2)), "A_");
  EXPECT_EQ(EncodeGraph6(Graph(0)), "?");
  EXPECT_EQ(DecodeGraph6("A_"), CompleteGraph(2));
  EXPECT_EQ(DecodeGraph6("@"), Graph(1));
  // Column order x(0,1), x(0,2), x(1,2): the path 0-1-2 sets bits 1,0,1,
  // padded to 101000 = 40, stored as 63 + 40.
  EXPECT_EQ(EncodeGraph6(MakeGraph(3, {{0, 1}, {1, 2}})), std::string("Bg"));
}

TEST(Graph6Test, RoundTripProperty) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::RandomGraph(trial % (kMaxGraph6Order + 1), 0.3, rng);
    EXPECT_EQ(DecodeGraph6(EncodeGraph6(g)), g);
  }
}

TEST(Graph6Test, MalformedInputReportsOffset) {
  auto offset_of = [](std::string_view text) -> long {
    try {
      DecodeGraph6(text);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("A"), 1);    // missing payload
  EXPECT_EQ(offset_of("A_?"), 2);  // trailing byte
  EXPECT_EQ(offset_of("B g"), 1);  // space is outside 63..126
  EXPECT_EQ(offset_of("A`"), 1);   // padding bit set
  EXPECT_EQ(offset_of("~"), 0);    // long-form header
  EXPECT_THROW(EncodeGraph6(Graph(63)), InputError);
}

}  // namespace
}  // namespace squco

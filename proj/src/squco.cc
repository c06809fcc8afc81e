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

#include "squco/squco.h"

#include <algorithm>
#include <stdexcept>

#include "squco/canonical.h"
#include "squco/errors.h"

namespace squco {

bool IsSquco(const Graph& g) { return AreIsomorphic(Square(g), Complement(g)); }

std::string_view FilterName(Filter f) {
  switch (f) {
    case Filter::kLowDegree:
      return "low-degree";
    case Filter::kConnected:
      return "connected";
    case Filter::kCutVertex:
      return "cut-vertex";
    case Filter::kRadiusDiameter:
      return "radius-diameter";
    case Filter::kGirth:
      return "girth";
    case Filter::kDegreeConsistency:
      return "degree-consistency";
    case Filter::kMaxDegreeMatch:
      return "max-degree-match";
  }
  return "?";
}

std::optional<Filter> ParseFilter(std::string_view name) {
  for (Filter f : kAllFilters) {
    if (FilterName(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

bool IsSevenCycle(const Graph& g) {
  if (g.order() != 7 || !IsConnected(g)) return false;
  for (int v = 0; v < 7; ++v) {
    if (g.Degree(v) != 2) return false;
  }
  return true;
}

// deg of v in complement(square(g)) is |N_{>=3}(v, g)|.
std::vector<int> FarCounts(const Graph& g) {
  std::vector<int> out(g.order());
  for (int v = 0; v < g.order(); ++v) out[v] = Count(BfsLayers(g, v).AtLeast(3));
  return out;
}

std::string Join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

FilterResult Fail(Filter f, std::string detail) { return {f, false, std::move(detail)}; }

}  // namespace

FilterResult EvaluateFilter(const Graph& g, Filter f) {
  const int n = g.order();
  switch (f) {
    case Filter::kLowDegree: {
      if (n >= 2 && MaxDegree(g) <= 2 && !IsSevenCycle(g)) {
        return Fail(f, "max degree " + std::to_string(MaxDegree(g)) + " but not C7");
      }
      break;
    }
    case Filter::kConnected: {
      if (!IsConnected(g)) return Fail(f, "disconnected");
      break;
    }
    case Filter::kCutVertex: {
      const VertexSet cuts = AnalyzeBiconnectivity(g).cut_vertices;
      if (cuts != 0) return Fail(f, "cut vertex " + std::to_string(std::countr_zero(cuts)));
      break;
    }
    case Filter::kRadiusDiameter: {
      if (n < 2) break;
      const auto rd = ComputeRadiusDiameter(g);
      if (!rd) return Fail(f, "disconnected");
      const std::string values =
          "radius " + std::to_string(rd->radius) + ", diameter " + std::to_string(rd->diameter);
      if (rd->radius != 3 || rd->diameter < 3 || rd->diameter > 4) return Fail(f, values);
      if (IsRegular(g) && rd->diameter != 3) return Fail(f, "regular with " + values);
      break;
    }
    case Filter::kGirth: {
      if (n < 2) break;
      const Girth girth = ComputeGirth(g);
      const bool allowed = (girth.is_finite() && girth.length() <= 5) ||
                           (girth == Girth::Finite(7) && IsSevenCycle(g));
      if (!allowed) return Fail(f, "girth " + girth.ToString());
      break;
    }
    case Filter::kDegreeConsistency: {
      std::vector<int> far = FarCounts(g);
      std::sort(far.begin(), far.end(), std::greater<>());
      const std::vector<int> degrees = DegreeSequence(g);
      if (far != degrees) {
        return Fail(f, "|N>=3| sequence " + Join(far) + " vs degrees " + Join(degrees));
      }
      break;
    }
    case Filter::kMaxDegreeMatch: {
      const std::vector<int> far = FarCounts(g);
      const int far_max = far.empty() ? 0 : *std::max_element(far.begin(), far.end());
      if (far_max != MaxDegree(g)) {
        return Fail(f, "max degree " + std::to_string(MaxDegree(g)) +
                           " vs complement-square max degree " + std::to_string(far_max));
      }
      break;
    }
  }
  return {f, true, ""};
}

std::span<const Filter> StageFilters(Stage stage) {
  static constexpr std::array<Filter, 3> kQuick = {
      Filter::kLowDegree, Filter::kConnected, Filter::kGirth};
  if (stage == Stage::kQuick) return kQuick;
  return kAllFilters;
}

FilterVerdict ApplyFilters(const Graph& g, std::span<const Filter> filters) {
  for (Filter f : filters) {
    FilterResult r = EvaluateFilter(g, f);
    if (!r.passed) return {false, f, std::move(r.detail)};
  }
  return {};
}

FilterVerdict NecessaryFilter(const Graph& g, Stage stage) {
  return ApplyFilters(g, StageFilters(stage));
}

LemmaResult Girth6LocalLemma(const Graph& g, int x) {
  const DistanceLayers layers = BfsLayers(g, x);
  const VertexSet n1 = layers.Layer(1);
  const VertexSet n2 = layers.Layer(2);
  for (int i = 1; i <= 2; ++i) {
    const VertexSet layer = layers.Layer(i);
    for (int u : Members(layer)) {
      if (VertexSet inside = g.Neighbors(u) & layer; inside != 0) {
        const int w = std::countr_zero(inside);
        return {false, {u, w},
                "edge " + std::to_string(u) + "-" + std::to_string(w) + " inside N_" +
                    std::to_string(i) + "(" + std::to_string(x) + ")"};
      }
    }
  }
  for (int y : Members(n2)) {
    const VertexSet up = g.Neighbors(y) & n1;
    if (Count(up) >= 2) {
      const int a = std::countr_zero(up);
      const int b = std::countr_zero(up & (up - 1));
      return {false, {a, b, y},
              "N_1 vertices " + std::to_string(a) + "," + std::to_string(b) +
                  " share neighbor " + std::to_string(y) + " in N_2"};
    }
  }
  return {};
}

std::string_view WitnessTagName(WitnessTag tag) {
  switch (tag) {
    case WitnessTag::kDegreeSequenceMismatch:
      return "DegreeSequenceMismatch";
    case WitnessTag::kMaxDegreeExcess:
      return "MaxDegreeExcess";
    case WitnessTag::kDegreeOneInComplementSquare:
      return "DegreeOneInComplementSquare";
    case WitnessTag::kCutVertexInComplementSquare:
      return "CutVertexInComplementSquare";
    case WitnessTag::kGirthMismatch:
      return "GirthMismatch";
    case WitnessTag::kRadiusDiameterViolation:
      return "RadiusDiameterViolation";
    case WitnessTag::kSmallOrderExhausted:
      return "SmallOrderExhausted";
    case WitnessTag::kDegreeTwoCountMismatch:
      return "DegreeTwoCountMismatch";
    case WitnessTag::kNotIsomorphicFallback:
      return "NotIsomorphicFallback";
  }
  return "?";
}

namespace {

bool RadiusDiameterOk(const std::optional<RadiusDiameter>& rd) {
  return rd && rd->radius == 3 && rd->diameter >= 3 && rd->diameter <= 4;
}

int CountDegree(const Graph& g, int d) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.Degree(v) == d;
  return count;
}

}  // namespace

RefutationWitness RefuteGirth6(const Graph& g) {
  if (ComputeGirth(g) != Girth::Finite(6)) {
    throw InputError("RefuteGirth6 requires a graph of girth 6, got girth " +
                     ComputeGirth(g).ToString());
  }
  const Graph h = Complement(Square(g));

  const std::vector<int> dg = DegreeSequence(g);
  const std::vector<int> dh = DegreeSequence(h);
  for (std::size_t i = 0; i < dg.size(); ++i) {
    if (dg[i] != dh[i]) {
      return {WitnessTag::kDegreeSequenceMismatch, static_cast<int>(i), dg[i], dh[i],
              "sorted degree sequences differ at index " + std::to_string(i) + ": " +
                  std::to_string(dg[i]) + " vs " + std::to_string(dh[i])};
    }
  }

  for (int v = 0; v < h.order(); ++v) {
    if (h.Degree(v) == 1) {
      return {WitnessTag::kDegreeOneInComplementSquare, v, g.Degree(v), 1,
              "vertex " + std::to_string(v) + " has degree 1 in complement(square)"};
    }
  }

  if (const VertexSet cuts = AnalyzeBiconnectivity(h).cut_vertices; cuts != 0) {
    const int v = std::countr_zero(cuts);
    return {WitnessTag::kCutVertexInComplementSquare, v, 0, 1,
            "vertex " + std::to_string(v) + " is a cut vertex of complement(square)"};
  }

  const auto rg = ComputeRadiusDiameter(g);
  const auto rh = ComputeRadiusDiameter(h);
  if (!RadiusDiameterOk(rg) || !RadiusDiameterOk(rh) || rg->diameter != rh->diameter) {
    auto describe = [](const std::optional<RadiusDiameter>& rd) {
      return rd ? std::to_string(rd->radius) + "/" + std::to_string(rd->diameter)
                : std::string("disconnected");
    };
    return {WitnessTag::kRadiusDiameterViolation, -1, rg ? rg->diameter : -1,
            rh ? rh->diameter : -1,
            "radius/diameter " + describe(rg) + " vs complement(square) " + describe(rh)};
  }

  if (const Girth gh = ComputeGirth(h); gh != Girth::Finite(6)) {
    return {WitnessTag::kGirthMismatch, -1, 6, gh.is_finite() ? gh.length() : -1,
            "complement(square) has girth " + gh.ToString()};
  }

  if (g.order() <= kExhaustedSqucoOrder) {
    return {WitnessTag::kSmallOrderExhausted, -1, kExhaustedSqucoOrder, g.order(),
            "order " + std::to_string(g.order()) + " is within the exhausted range"};
  }

  if (const int a = CountDegree(g, 2), b = CountDegree(h, 2); a != b) {
    return {WitnessTag::kDegreeTwoCountMismatch, -1, a, b,
            std::to_string(a) + " degree-two vertices vs " + std::to_string(b)};
  }

  if (AreIsomorphic(g, h)) {
    throw std::logic_error("squco graph of girth 6 found: " + g.DebugString());
  }
  return {WitnessTag::kNotIsomorphicFallback, -1, 0, 0,
          "graph and complement(square) are not isomorphic"};
}

PropertyReport Report(const Graph& g) {
  PropertyReport r;
  r.order = g.order();
  r.size = g.size();
  r.degree_sequence = DegreeSequence(g);
  r.max_degree = r.degree_sequence.empty() ? 0 : r.degree_sequence.front();
  r.girth = ComputeGirth(g);
  if (const auto rd = ComputeRadiusDiameter(g)) {
    r.radius = rd->radius;
    r.diameter = rd->diameter;
  }
  const Biconnectivity b = AnalyzeBiconnectivity(g);
  r.connected = b.connected;
  r.cut_vertices = Members(b.cut_vertices);
  r.regular = IsRegular(g);
  r.bipartite = IsBipartite(g);
  r.vertex_transitive = IsVertexTransitive(g);
  r.squco = IsSquco(g);
  for (Filter f : kAllFilters) r.filter_results.push_back(EvaluateFilter(g, f));
  return r;
}

}  // namespace squco

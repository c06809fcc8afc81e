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

#include <algorithm>
#include <array>
#include <mutex>
#include <thread>
#include <unordered_set>
#include <utility>

#include "partition.h"
#include "squco/checkpoint.h"
#include "squco/errors.h"

namespace squco {

void SearchConfig::Validate() const {
  if (min_order < 1 || max_order > kMaxOrder || min_order > max_order) {
    throw InputError("order range " + std::to_string(min_order) + ".." +
                     std::to_string(max_order) + " must lie within 1.." +
                     std::to_string(kMaxOrder));
  }
  if (min_girth && *min_girth < 3) throw InputError("min girth must be at least 3");
  if (max_girth && *max_girth < 3) throw InputError("max girth must be at least 3");
  if (max_degree && *max_degree < 0) throw InputError("max degree must be nonnegative");
  if (jobs < 1) throw InputError("job count must be positive");
}

std::string SearchConfig::CanonicalText() const {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; };
  std::string text = "orders=" + std::to_string(min_order) + ".." + std::to_string(max_order) +
                     ";min_girth=" + opt(min_girth) + ";max_girth=" + opt(max_girth) +
                     ";max_degree=" + opt(max_degree) + ";filters=";
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (i > 0) text += ",";
    text += FilterName(filters[i]);
  }
  text += ";squco=";
  text += squco_check ? "1" : "0";
  return text;
}

std::string SearchConfig::Digest() const { return HashHex(CanonicalText()); }

bool SearchSummary::SameResults(const SearchSummary& other) const {
  return per_order == other.per_order && rejections == other.rejections &&
         accepted == other.accepted;
}

void SearchSummary::MergeFrom(const SearchSummary& part) {
  for (const auto& [order, count] : part.per_order) {
    per_order[order].generated += count.generated;
    per_order[order].accepted += count.accepted;
  }
  for (const auto& [name, count] : part.rejections) rejections[name] += count;
  accepted.insert(accepted.end(), part.accepted.begin(), part.accepted.end());
}

std::vector<Graph> AcceptedGraphs(const SearchSummary& summary) {
  std::vector<Graph> out;
  out.reserve(summary.accepted.size());
  for (const Certificate& c : summary.accepted) out.push_back(GraphFromCertificate(c));
  return out;
}

namespace {

struct Node {
  Graph graph;
  Certificate certificate;
};

// Canonical vertex augmentation. A child (parent plus vertex m joined to S)
// is kept iff m lies in the automorphism orbit of the child's canonical
// deletion vertex, the one placed last by the canonical labeling. That vertex
// lies in the last cell of the refined root partition, which only holds
// maximum-degree vertices, so cheaper degree and root-cell tests run first.
class Expander {
 public:
  explicit Expander(const SearchConfig& config)
      : forbidden_distance_(config.min_girth.value_or(3) - 3),
        max_degree_(config.max_degree.value_or(kMaxOrder)) {}

  std::vector<Node> Children(const Node& parent) const {
    const Graph& g = parent.graph;
    Context ctx{g, {}, {}, 0, {}, {}};
    const int m = g.order();
    if (m >= kMaxOrder) return {};
    VertexSet allowed = 0;
    for (int v = 0; v < m; ++v) {
      ctx.degree[v] = g.Degree(v);
      ctx.max_degree = std::max(ctx.max_degree, ctx.degree[v]);
      if (ctx.degree[v] < max_degree_) allowed |= Bit(v);
    }
    if (forbidden_distance_ >= 1) {
      for (int v = 0; v < m; ++v) {
        const DistanceLayers layers = BfsLayers(g, v);
        for (int i = 1; i <= forbidden_distance_; ++i) ctx.conflict[v] |= layers.Layer(i);
      }
    }
    Extend(ctx, 0, 0, allowed);
    return std::move(ctx.out);
  }

 private:
  struct Context {
    const Graph& g;
    std::array<int, kMaxOrder> degree;
    std::array<VertexSet, kMaxOrder> conflict;
    int max_degree;
    std::unordered_set<std::string> seen;
    std::vector<Node> out;
  };

  void Extend(Context& ctx, VertexSet chosen, int size, VertexSet candidates) const {
    if (size >= ctx.max_degree) Consider(ctx, chosen, size);
    if (size == max_degree_) return;
    // The new vertex needs degree >= every degree in the child.
    if (size + Count(candidates) < ctx.max_degree) return;
    while (candidates != 0) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      Extend(ctx, chosen | Bit(v), size + 1, candidates & ~ctx.conflict[v]);
    }
  }

  void Consider(Context& ctx, VertexSet chosen, int size) const {
    for (VertexSet s = chosen; s != 0; s &= s - 1) {
      if (ctx.degree[std::countr_zero(s)] + 1 > size) return;
    }
    const int m = ctx.g.order();
    Graph child = ctx.g.WithVertex(chosen);
    const internal::Partition root = internal::RootPartition(child);
    if (!(root.CellMembers(root.LastCellStart()) & Bit(m))) return;
    CanonicalForm form = internal::CanonicalizeFromRoot(child, root);
    if (!form.orbits.SameOrbit(m, form.labeling[m])) return;
    if (!ctx.seen.insert(form.certificate.bytes).second) return;
    ctx.out.push_back({std::move(child), std::move(form.certificate)});
  }

  const int forbidden_distance_;
  const int max_degree_;
};

class LeafChecks {
 public:
  explicit LeafChecks(const SearchConfig& config) : config_(config) {
    for (Filter f : kAllFilters) {
      if (std::find(config.filters.begin(), config.filters.end(), f) != config.filters.end()) {
        filters_.push_back(f);
      }
    }
  }

  void Prepare(SearchSummary& summary) const {
    for (int n = config_.min_order; n <= config_.max_order; ++n) summary.per_order[n];
    if (config_.max_girth) summary.rejections[std::string(kMaxGirthCheck)];
    for (Filter f : filters_) summary.rejections[std::string(FilterName(f))];
    if (config_.squco_check) summary.rejections[std::string(kSqucoCheck)];
  }

  void Visit(const Node& node, SearchSummary& summary) const {
    const Graph& g = node.graph;
    OrderCount& count = summary.per_order[g.order()];
    ++count.generated;
    if (config_.max_girth) {
      const Girth girth = ComputeGirth(g);
      if (!girth.is_finite() || girth.length() > *config_.max_girth) {
        ++summary.rejections[std::string(kMaxGirthCheck)];
        return;
      }
    }
    for (Filter f : filters_) {
      if (!EvaluateFilter(g, f).passed) {
        ++summary.rejections[std::string(FilterName(f))];
        return;
      }
    }
    if (config_.squco_check && !IsSquco(g)) {
      ++summary.rejections[std::string(kSqucoCheck)];
      return;
    }
    ++count.accepted;
    summary.accepted.push_back(node.certificate);
  }

 private:
  const SearchConfig& config_;
  std::vector<Filter> filters_;
};

void Explore(const Expander& expander, const LeafChecks& checks, const SearchConfig& config,
             const Node& node, SearchSummary& summary) {
  const int order = node.graph.order();
  if (order >= config.min_order) checks.Visit(node, summary);
  if (order >= config.max_order) return;
  for (const Node& child : expander.Children(node)) {
    Explore(expander, checks, config, child, summary);
  }
}

}  // namespace

SearchSummary Enumerate(const SearchConfig& config) {
  config.Validate();
  const Expander expander(config);
  const LeafChecks checks(config);

  SearchSummary summary;
  checks.Prepare(summary);

  // Breadth-first until the level is wide enough to split into branches. The
  // width alone decides, so the level stays small even for a large min_order.
  std::vector<Node> level;
  level.push_back({Graph(1), CertificateOf(Graph(1))});
  int order = 1;
  while (order < config.max_order && level.size() < kMinBranches) {
    std::vector<Node> next;
    for (const Node& node : level) {
      if (order >= config.min_order) checks.Visit(node, summary);
      for (Node& child : expander.Children(node)) next.push_back(std::move(child));
    }
    level = std::move(next);
    ++order;
  }
  std::sort(level.begin(), level.end(), [](const Node& a, const Node& b) {
    return a.certificate < b.certificate;
  });

  const std::size_t total = level.size();
  std::vector<std::optional<SearchSummary>> results(total);
  std::optional<Checkpoint> checkpoint;
  if (config.checkpoint) {
    std::string warning;
    checkpoint.emplace(Checkpoint::Open(*config.checkpoint, config.Digest(), total, &warning));
    if (!warning.empty()) summary.warnings.push_back(warning);
    for (const auto& [id, partial] : checkpoint->finished()) results[id] = partial;
  }
  std::vector<std::size_t> pending;
  for (std::size_t id = 0; id < total; ++id) {
    if (!results[id]) pending.push_back(id);
  }

  std::mutex mu;
  std::size_t next_index = 0;
  std::size_t finished_here = 0;
  std::size_t finished_total = total - pending.size();
  auto worker = [&] {
    while (true) {
      std::size_t id;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next_index >= pending.size()) return;
        if (config.cancel && config.cancel->load()) return;
        if (config.stop_after_branches > 0 && finished_here >= config.stop_after_branches) return;
        id = pending[next_index++];
      }
      SearchSummary part;
      Explore(expander, checks, config, level[id], part);
      if (checkpoint) checkpoint->Save(id, part);
      std::lock_guard<std::mutex> lock(mu);
      results[id] = std::move(part);
      ++finished_here;
      ++finished_total;
      if (config.progress) config.progress(finished_total, total);
    }
  };
  const int threads = static_cast<int>(std::min<std::size_t>(config.jobs, pending.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  summary.branches_total = total;
  for (const auto& part : results) {
    if (!part) continue;
    summary.MergeFrom(*part);
    ++summary.branches_completed;
  }
  summary.complete = summary.branches_completed == total;
  std::sort(summary.accepted.begin(), summary.accepted.end());
  return summary;
}

SearchSummary Enumerate(const SearchConfig& config, const ReportVisitor& visit) {
  SearchSummary summary = Enumerate(config);
  for (const Certificate& c : summary.accepted) {
    const Graph g = GraphFromCertificate(c);
    visit(g, Report(g));
  }
  return summary;
}

}  // namespace squco

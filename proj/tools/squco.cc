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

// Command-line front end: check, filter, enumerate and make.

#include <atomic>
#include <charconv>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "squco/checkpoint.h"
#include "squco/constructors.h"
#include "squco/enumerate.h"
#include "squco/errors.h"
#include "squco/graph6.h"
#include "squco/report_document.h"
#include "squco/squco.h"

namespace squco {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCheckpointError = 3;
constexpr int kExitInterrupted = 4;
constexpr int kExitNotSquco = 10;

std::atomic<bool> g_cancel{false};

extern "C" void OnInterrupt(int) { g_cancel.store(true); }

std::string Trim(std::string_view s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int ParseIntOrThrow(std::string_view text, std::string_view what) {
  int value = 0;
  const std::string t = Trim(text);
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size()) {
    throw InputError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> ParseIntList(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t at = 0;
  while (true) {
    const std::size_t comma = text.find(',', at);
    out.push_back(ParseIntOrThrow(text.substr(at, comma - at), what));
    if (comma == std::string_view::npos) break;
    at = comma + 1;
  }
  return out;
}

std::vector<Filter> ParseFilters(const std::vector<std::string>& names) {
  std::vector<Filter> out;
  for (const std::string& name : names) {
    const std::optional<Filter> f = ParseFilter(name);
    if (!f) throw InputError("unknown filter '" + name + "'");
    out.push_back(*f);
  }
  return out;
}

std::string FilterList() {
  std::string out;
  for (Filter f : kAllFilters) {
    if (!out.empty()) out += ", ";
    out += FilterName(f);
  }
  return out;
}

// check ---------------------------------------------------------------------

struct CheckOptions {
  std::string name;
  std::string g6;
  bool json = false;
};

int RunCheck(const CheckOptions& opts) {
  Graph g(0);
  if (!opts.name.empty()) {
    g = Named(opts.name);
  } else if (!opts.g6.empty()) {
    g = DecodeGraph6(opts.g6);
  } else {
    std::vector<std::string> lines;
    for (std::string line; std::getline(std::cin, line);) {
      line = Trim(line);
      if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() != 1) {
      throw InputError("check expects exactly one graph6 line on stdin, got " +
                       std::to_string(lines.size()));
    }
    g = DecodeGraph6(lines[0]);
  }
  const ReportDocument doc = MakeReportDocument(g);
  std::cout << (opts.json ? ToJson(doc) : ToText(doc));
  return doc.report.squco ? kExitOk : kExitNotSquco;
}

// filter --------------------------------------------------------------------

struct FilterOptions {
  std::vector<std::string> filters;
  bool squco = false;
  bool lenient = false;
};

int RunFilter(const FilterOptions& opts) {
  std::vector<Filter> filters = ParseFilters(opts.filters);
  if (filters.empty()) filters.assign(kAllFilters.begin(), kAllFilters.end());
  std::map<std::string, std::uint64_t> rejected;
  std::uint64_t read = 0;
  std::uint64_t passed = 0;
  std::uint64_t malformed = 0;
  std::size_t line_number = 0;
  for (std::string raw; std::getline(std::cin, raw);) {
    ++line_number;
    const std::string line = Trim(raw);
    if (line.empty()) continue;
    ++read;
    Graph g(0);
    try {
      g = DecodeGraph6(line);
    } catch (const Graph6Error& e) {
      ++malformed;
      std::cerr << "warning: line " << line_number << ": " << e.what() << "; skipped\n";
      continue;
    }
    const FilterVerdict verdict = ApplyFilters(g, filters);
    if (!verdict.passed) {
      ++rejected[std::string(FilterName(*verdict.failed))];
      continue;
    }
    if (opts.squco && !IsSquco(g)) {
      ++rejected[std::string(kSqucoCheck)];
      continue;
    }
    ++passed;
    std::cout << line << '\n';
  }
  std::cout.flush();
  std::cerr << "read " << read << ", passed " << passed << ", malformed " << malformed;
  for (const auto& [name, count] : rejected) std::cerr << ", " << name << " " << count;
  std::cerr << '\n';
  return malformed > 0 && !opts.lenient ? kExitInputError : kExitOk;
}

// enumerate -----------------------------------------------------------------

struct EnumerateOptions {
  std::string orders;
  std::optional<int> min_girth;
  std::optional<int> max_girth;
  std::optional<int> max_degree;
  std::vector<std::string> filters;
  bool squco = false;
  std::optional<int> jobs;
  std::string checkpoint;
  std::size_t stop_after = 0;
  bool progress = false;
};

int DefaultJobs() {
  if (const char* env = std::getenv("SQUCO_JOBS"); env != nullptr && *env != '\0') {
    return ParseIntOrThrow(env, "SQUCO_JOBS");
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int RunEnumerate(const EnumerateOptions& opts) {
  SearchConfig config;
  const std::size_t dots = opts.orders.find("..");
  if (dots == std::string::npos) {
    config.min_order = config.max_order = ParseIntOrThrow(opts.orders, "order");
  } else {
    config.min_order = ParseIntOrThrow(opts.orders.substr(0, dots), "order range");
    config.max_order = ParseIntOrThrow(opts.orders.substr(dots + 2), "order range");
  }
  if (config.max_order > kMaxGraph6Order) {
    throw InputError("orders above " + std::to_string(kMaxGraph6Order) +
                     " cannot be written as graph6");
  }
  config.min_girth = opts.min_girth;
  config.max_girth = opts.max_girth;
  config.max_degree = opts.max_degree;
  config.filters = ParseFilters(opts.filters);
  config.squco_check = opts.squco;
  if (opts.squco && opts.filters.empty()) {
    // Cheap necessary conditions. The girth filter is left out because it
    // already assumes the girth-6 result that a campaign sets out to check.
    for (Filter f : kAllFilters) {
      if (f != Filter::kGirth) config.filters.push_back(f);
    }
  }
  config.jobs = opts.jobs ? *opts.jobs : DefaultJobs();
  if (!opts.checkpoint.empty()) config.checkpoint = opts.checkpoint;
  config.stop_after_branches = opts.stop_after;
  config.cancel = &g_cancel;
  if (opts.progress) {
    config.progress = [](std::size_t done, std::size_t total) {
      std::cerr << "progress: " << done << "/" << total << " branches\n";
    };
  }
  config.Validate();

  std::signal(SIGINT, OnInterrupt);
  const auto start = std::chrono::steady_clock::now();
  const SearchSummary summary = Enumerate(config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (const std::string& w : summary.warnings) std::cerr << "warning: " << w << '\n';
  if (summary.complete) {
    for (const Graph& g : AcceptedGraphs(summary)) std::cout << EncodeGraph6(g) << '\n';
    std::cout.flush();
  }
  std::cerr << "config: " << config.CanonicalText() << '\n';
  for (const auto& [order, count] : summary.per_order) {
    std::cerr << "order " << order << ": generated " << count.generated << ", accepted "
              << count.accepted << '\n';
  }
  for (const auto& [name, count] : summary.rejections) {
    std::cerr << "rejected by " << name << ": " << count << '\n';
  }
  std::cerr << "accepted: " << summary.TotalAccepted() << '\n'
            << "branches: " << summary.branches_completed << "/" << summary.branches_total
            << '\n';
  char duration[32];
  std::snprintf(duration, sizeof(duration), "%.3f", seconds);
  std::cerr << "duration: " << duration << " s\n";
  if (!summary.complete) {
    std::cerr << "interrupted: results withheld";
    if (config.checkpoint) std::cerr << "; rerun with the same checkpoint to resume";
    std::cerr << '\n';
    return kExitInterrupted;
  }
  return kExitOk;
}

// make ----------------------------------------------------------------------

struct MakeOptions {
  std::string name;
  std::string circulant;
  std::string lcf;
};

int RunMake(const MakeOptions& opts) {
  const int given = !opts.name.empty() + !opts.circulant.empty() + !opts.lcf.empty();
  if (given != 1) throw InputError("make needs exactly one of --name, --circulant, --lcf");
  Graph g(0);
  if (!opts.name.empty()) {
    g = Named(opts.name);
  } else {
    const std::string& spec = opts.circulant.empty() ? opts.lcf : opts.circulant;
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("expected a ':' in '" + spec + "'");
    const std::string head = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);
    if (!opts.circulant.empty()) {
      g = Circulant({ParseIntOrThrow(head, "circulant order"), ParseIntList(tail, "step")});
    } else {
      g = Lcf({ParseIntList(head, "LCF step"), ParseIntOrThrow(tail, "LCF repeat count")});
    }
  }
  std::cout << EncodeGraph6(g) << '\n';
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Square-complementary graph toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CheckOptions check;
  CLI::App* check_cmd = app.add_subcommand("check", "Report the properties of one graph");
  check_cmd->add_option("--name", check.name, "Named graph (k1, c<n>, path<n>, complete<n>, "
                                              "franklin, heawood, c41-squco)");
  check_cmd->add_option("--g6", check.g6, "Graph in graph6 format");
  check_cmd->add_flag("--json", check.json, "Emit JSON instead of key: value text");
  check_cmd->footer("Reads one graph6 line from stdin when no graph is given. "
                    "Exit 0 if squco, 10 if not, 2 on input errors.");

  FilterOptions filter;
  CLI::App* filter_cmd = app.add_subcommand("filter", "Pass through graphs that survive filters");
  filter_cmd->add_option("--filter", filter.filters, "Filter to apply (repeatable): " + FilterList())
      ->take_all();
  filter_cmd->add_flag("--squco", filter.squco, "Also require the squco property");
  filter_cmd->add_flag("--lenient", filter.lenient, "Exit 0 even if lines were malformed");
  filter_cmd->footer("Without --filter every filter runs.");

  EnumerateOptions enumerate;
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "List graphs up to isomorphism");
  enum_cmd->add_option("-n,--orders", enumerate.orders, "Order or range a..b")->required();
  enum_cmd->add_option("--min-girth", enumerate.min_girth, "Forbid cycles shorter than this");
  enum_cmd->add_option("--max-girth", enumerate.max_girth, "Require a cycle of at most this length");
  enum_cmd->add_option("--max-degree", enumerate.max_degree, "Degree cap");
  enum_cmd->add_option("--filter", enumerate.filters, "Leaf filter (repeatable): " + FilterList())
      ->take_all();
  enum_cmd->add_flag("--squco", enumerate.squco,
                     "Keep squco graphs only; without --filter, every filter but girth prefilters");
  enum_cmd->add_option("-j,--jobs", enumerate.jobs, "Worker threads (default $SQUCO_JOBS or all cores)");
  enum_cmd->add_option("--checkpoint", enumerate.checkpoint, "Resumable checkpoint file");
  enum_cmd->add_option("--stop-after", enumerate.stop_after)->group("");
  enum_cmd->add_flag("--progress", enumerate.progress, "Print completed branch fractions");

  MakeOptions make;
  CLI::App* make_cmd = app.add_subcommand("make", "Print a constructed graph as graph6");
  make_cmd->add_option("--name", make.name, "Named graph");
  make_cmd->add_option("--circulant", make.circulant, "Circulant n:s1,s2,...");
  make_cmd->add_option("--lcf", make.lcf, "LCF steps:repeats, e.g. 5,-5:6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*check_cmd) return RunCheck(check);
    if (*filter_cmd) return RunFilter(filter);
    if (*enum_cmd) return RunEnumerate(enumerate);
    return RunMake(make);
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kExitCheckpointError;
  }
}

}  // namespace
}  // namespace squco

int main(int argc, char** argv) { return squco::Main(argc, argv); }

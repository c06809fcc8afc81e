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

#include "squco/report_document.h"

#include <charconv>
#include <chrono>
#include <map>
#include <sstream>

#include "json.hpp"
#include "squco/checkpoint.h"
#include "squco/enumerate.h"
#include "squco/errors.h"
#include "squco/graph6.h"

namespace squco {
namespace {

using Json = nlohmann::ordered_json;

std::string JoinInts(const std::vector<int>& values) {
  if (values.empty()) return "-";
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string OptionalInt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

std::string Bool(bool b) { return b ? "true" : "false"; }

int ParseInt(std::string_view key, std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError("report: bad integer for " + std::string(key) + ": '" +
                     std::string(text) + "'");
  }
  return value;
}

std::int64_t ParseInt64(std::string_view key, std::string_view text) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError("report: bad integer for " + std::string(key));
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw InputError("report: bad boolean for " + std::string(key));
}

std::vector<int> ParseInts(std::string_view key, std::string_view text) {
  std::vector<int> out;
  if (text == "-") return out;
  std::size_t at = 0;
  while (at <= text.size()) {
    const std::size_t space = std::min(text.find(' ', at), text.size());
    out.push_back(ParseInt(key, text.substr(at, space - at)));
    at = space + 1;
  }
  return out;
}

std::optional<int> ParseOptionalInt(std::string_view key, std::string_view text) {
  if (text == "none") return std::nullopt;
  return ParseInt(key, text);
}

Girth ParseGirth(std::string_view text) {
  if (text == "inf") return Girth::Infinite();
  return Girth::Finite(ParseInt("girth", text));
}

Filter FilterOrThrow(std::string_view name) {
  const std::optional<Filter> f = ParseFilter(name);
  if (!f) throw InputError("report: unknown filter '" + std::string(name) + "'");
  return *f;
}

}  // namespace

ReportDocument MakeReportDocument(const Graph& g) {
  ReportDocument doc;
  doc.tool_version = std::string(kToolVersion);
  doc.graph6 = EncodeGraph6(g);
  doc.input_digest = HashHex(doc.graph6);
  const auto start = std::chrono::steady_clock::now();
  doc.report = Report(g);
  doc.duration_us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return doc;
}

std::string ToText(const ReportDocument& doc) {
  const PropertyReport& r = doc.report;
  std::ostringstream out;
  out << "tool_version: " << doc.tool_version << '\n'
      << "graph6: " << doc.graph6 << '\n'
      << "input_digest: " << doc.input_digest << '\n'
      << "order: " << r.order << '\n'
      << "size: " << r.size << '\n'
      << "degree_sequence: " << JoinInts(r.degree_sequence) << '\n'
      << "max_degree: " << r.max_degree << '\n'
      << "girth: " << r.girth.ToString() << '\n'
      << "radius: " << OptionalInt(r.radius) << '\n'
      << "diameter: " << OptionalInt(r.diameter) << '\n'
      << "connected: " << Bool(r.connected) << '\n'
      << "cut_vertices: " << JoinInts(r.cut_vertices) << '\n'
      << "regular: " << Bool(r.regular) << '\n'
      << "bipartite: " << Bool(r.bipartite) << '\n'
      << "vertex_transitive: " << Bool(r.vertex_transitive) << '\n'
      << "squco: " << Bool(r.squco) << '\n';
  for (const FilterResult& f : r.filter_results) {
    out << "filter." << FilterName(f.filter) << ": " << (f.passed ? "pass" : "fail") << '\n';
    if (!f.detail.empty()) {
      out << "filter." << FilterName(f.filter) << ".detail: " << f.detail << '\n';
    }
  }
  out << "duration_us: " << doc.duration_us << '\n';
  return out.str();
}

ReportDocument ParseText(std::string_view text) {
  ReportDocument doc;
  PropertyReport& r = doc.report;
  std::map<std::string, std::string> seen;
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t eol = text.find('\n', at);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(at, eol - at);
    at = eol + 1;
    if (line.empty()) continue;
    const std::size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      throw InputError("report: line without key: '" + std::string(line) + "'");
    }
    const std::string key(line.substr(0, colon));
    const std::string_view value = line.substr(colon + 2);
    if (!seen.emplace(key, value).second) throw InputError("report: duplicate key " + key);
    if (key.starts_with("filter.")) {
      std::string_view name = std::string_view(key).substr(7);
      if (name.ends_with(".detail")) {
        name.remove_suffix(7);
        const Filter f = FilterOrThrow(name);
        if (r.filter_results.empty() || r.filter_results.back().filter != f) {
          throw InputError("report: detail without verdict for " + std::string(name));
        }
        r.filter_results.back().detail = std::string(value);
      } else {
        if (value != "pass" && value != "fail") throw InputError("report: bad verdict for " + key);
        r.filter_results.push_back({FilterOrThrow(name), value == "pass", ""});
      }
      continue;
    }
    if (key == "tool_version") {
      doc.tool_version = value;
    } else if (key == "graph6") {
      doc.graph6 = value;
    } else if (key == "input_digest") {
      doc.input_digest = value;
    } else if (key == "order") {
      r.order = ParseInt(key, value);
    } else if (key == "size") {
      r.size = ParseInt(key, value);
    } else if (key == "degree_sequence") {
      r.degree_sequence = ParseInts(key, value);
    } else if (key == "max_degree") {
      r.max_degree = ParseInt(key, value);
    } else if (key == "girth") {
      r.girth = ParseGirth(value);
    } else if (key == "radius") {
      r.radius = ParseOptionalInt(key, value);
    } else if (key == "diameter") {
      r.diameter = ParseOptionalInt(key, value);
    } else if (key == "connected") {
      r.connected = ParseBool(key, value);
    } else if (key == "cut_vertices") {
      r.cut_vertices = ParseInts(key, value);
    } else if (key == "regular") {
      r.regular = ParseBool(key, value);
    } else if (key == "bipartite") {
      r.bipartite = ParseBool(key, value);
    } else if (key == "vertex_transitive") {
      r.vertex_transitive = ParseBool(key, value);
    } else if (key == "squco") {
      r.squco = ParseBool(key, value);
    } else if (key == "duration_us") {
      doc.duration_us = ParseInt64(key, value);
    } else {
      throw InputError("report: unknown key " + key);
    }
  }
  for (const char* required : {"tool_version", "graph6", "input_digest", "order", "size",
                               "degree_sequence", "max_degree", "girth", "radius", "diameter",
                               "connected", "cut_vertices", "regular", "bipartite",
                               "vertex_transitive", "squco", "duration_us"}) {
    if (!seen.contains(required)) throw InputError(std::string("report: missing key ") + required);
  }
  return doc;
}

std::string ToJson(const ReportDocument& doc) {
  const PropertyReport& r = doc.report;
  Json j;
  j["tool_version"] = doc.tool_version;
  j["graph6"] = doc.graph6;
  j["input_digest"] = doc.input_digest;
  j["order"] = r.order;
  j["size"] = r.size;
  j["degree_sequence"] = r.degree_sequence;
  j["max_degree"] = r.max_degree;
  j["girth"] = r.girth.is_finite() ? Json(r.girth.length()) : Json("inf");
  j["radius"] = r.radius ? Json(*r.radius) : Json(nullptr);
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);
  j["connected"] = r.connected;
  j["cut_vertices"] = r.cut_vertices;
  j["regular"] = r.regular;
  j["bipartite"] = r.bipartite;
  j["vertex_transitive"] = r.vertex_transitive;
  j["squco"] = r.squco;
  Json filters = Json::array();
  for (const FilterResult& f : r.filter_results) {
    filters.push_back({{"name", FilterName(f.filter)}, {"passed", f.passed}, {"detail", f.detail}});
  }
  j["filters"] = std::move(filters);
  j["duration_us"] = doc.duration_us;
  return j.dump(2) + "\n";
}

ReportDocument ParseJson(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ReportDocument doc;
    PropertyReport& r = doc.report;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.graph6 = j.at("graph6").get<std::string>();
    doc.input_digest = j.at("input_digest").get<std::string>();
    r.order = j.at("order").get<int>();
    r.size = j.at("size").get<int>();
    r.degree_sequence = j.at("degree_sequence").get<std::vector<int>>();
    r.max_degree = j.at("max_degree").get<int>();
    const Json& girth = j.at("girth");
    if (girth.is_string()) {
      if (girth.get<std::string>() != "inf") throw InputError("report: bad girth");
      r.girth = Girth::Infinite();
    } else {
      r.girth = Girth::Finite(girth.get<int>());
    }
    if (!j.at("radius").is_null()) r.radius = j.at("radius").get<int>();
    if (!j.at("diameter").is_null()) r.diameter = j.at("diameter").get<int>();
    r.connected = j.at("connected").get<bool>();
    r.cut_vertices = j.at("cut_vertices").get<std::vector<int>>();
    r.regular = j.at("regular").get<bool>();
    r.bipartite = j.at("bipartite").get<bool>();
    r.vertex_transitive = j.at("vertex_transitive").get<bool>();
    r.squco = j.at("squco").get<bool>();
    for (const Json& f : j.at("filters")) {
      r.filter_results.push_back({FilterOrThrow(f.at("name").get<std::string>()),
                                  f.at("passed").get<bool>(), f.at("detail").get<std::string>()});
    }
    doc.duration_us = j.at("duration_us").get<std::int64_t>();
    return doc;
  } catch (const Json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

}  // namespace squco

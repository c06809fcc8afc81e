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

#ifndef SQUCO_REPORT_DOCUMENT_H_
#define SQUCO_REPORT_DOCUMENT_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "squco/graph.h"
#include "squco/squco.h"

namespace squco {

// A property report plus the provenance needed to reproduce it.
struct ReportDocument {
  std::string tool_version;
  std::string graph6;        // the input graph, graph6-encoded
  std::string input_digest;  // HashHex of graph6
  std::int64_t duration_us = 0;
  PropertyReport report;
  bool operator==(const ReportDocument&) const = default;
};

// Computes Report(g) and times it.
ReportDocument MakeReportDocument(const Graph& g);

// "key: value" lines in a fixed key order. Filter details, when present,
// appear on their own "filter.<name>.detail" line.
std::string ToText(const ReportDocument& doc);
// Throws InputError on unknown, missing or malformed keys.
ReportDocument ParseText(std::string_view text);

// The same fields as a JSON object; infinite girth is the string "inf" and
// an undefined radius or diameter is null.
std::string ToJson(const ReportDocument& doc);
// Throws InputError on malformed documents.
ReportDocument ParseJson(std::string_view text);

}  // namespace squco

#endif  // SQUCO_REPORT_DOCUMENT_H_

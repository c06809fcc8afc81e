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

#include "squco/graph6.h"

#include "squco/errors.h"

namespace squco {

std::string EncodeGraph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw InputError("graph6 encoding supports order <= 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph DecodeGraph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = text[i];
    if (c < 63 || c > 126) throw Graph6Error("byte outside graph6 range 63..126", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxGraph6Order) {
    throw Graph6Error("graph6 orders above 62 are not supported", 0);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (text.size() != 1 + payload) {
    throw Graph6Error("graph6 length " + std::to_string(text.size()) +
                          " does not match order " + std::to_string(n) +
                          " (expected " + std::to_string(1 + payload) + ")",
                      std::min(text.size(), 1 + payload));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((value >> (5 - k % 6)) & 1) g.AddEdge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int value = static_cast<unsigned char>(text.back()) - 63;
    if (value & ((1 << (6 - bits % 6)) - 1)) {
      throw Graph6Error("nonzero graph6 padding bits", text.size() - 1);
    }
  }
  return g;
}

}  // namespace squco

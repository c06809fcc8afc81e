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

#ifndef SQUCO_GRAPH6_H_
#define SQUCO_GRAPH6_H_

#include <string>
#include <string_view>

#include "squco/graph.h"

namespace squco {

// Largest order expressible with the one-byte graph6 header.
inline constexpr int kMaxGraph6Order = 62;

// Standard graph6: byte 0 is 63 + n, then the upper triangle in column order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte (63 + value),
// zero-padded. Throws InputError for orders above kMaxGraph6Order.
std::string EncodeGraph6(const Graph& g);

// Throws Graph6Error carrying the offending byte offset. Nonzero padding bits
// are rejected.
Graph DecodeGraph6(std::string_view text);

}  // namespace squco

#endif  // SQUCO_GRAPH6_H_

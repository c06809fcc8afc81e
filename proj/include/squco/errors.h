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

#ifndef SQUCO_ERRORS_H_
#define SQUCO_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace squco {

// Raised for invalid user-supplied input: bad vertex ids, orders above the
// cap, malformed constructor specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph6 data. offset() is the byte position of the first bad byte.
class Graph6Error : public InputError {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : InputError(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Checkpoint file unreadable, corrupt, or written for a different search.
class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace squco

#endif  // SQUCO_ERRORS_H_

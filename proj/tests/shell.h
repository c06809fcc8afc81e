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

#ifndef SQUCO_TESTS_SHELL_H_
#define SQUCO_TESTS_SHELL_H_

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace squco::testing_shell {

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string Slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string EscapeForDoubleQuotes(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\' || c == '$' || c == '`') out += '\\';
    out += c;
  }
  return out;
}

// Runs a POSIX shell script inside dir with "$S" bound to binary and the
// given text on stdin; captures both output streams.
inline Result RunShell(const std::filesystem::path& dir, const std::string& binary,
                       const std::string& script, const std::string& input = "") {
  std::ofstream(dir / "in") << input;
  const std::string cmd = "cd '" + dir.string() + "' && S='" + binary + "' && ( " + script +
                          " ) < in > out 2> err";
  const int status = std::system(("sh -c \"" + EscapeForDoubleQuotes(cmd) + "\"").c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, Slurp(dir / "out"), Slurp(dir / "err")};
}

}  // namespace squco::testing_shell

#endif  // SQUCO_TESTS_SHELL_H_

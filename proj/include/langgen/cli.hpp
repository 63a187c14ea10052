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
//
// Command-line front end. Exit codes: 0 success, 1 validation failure,
// 2 configuration error, 3 I/O error.

#ifndef LANGGEN_CLI_HPP_
#define LANGGEN_CLI_HPP_

#include <iosfwd>

namespace langgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

// Runs one command with the given argument vector (argv[0] is the program
// name). All output goes to `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace langgen::cli

#endif  // LANGGEN_CLI_HPP_

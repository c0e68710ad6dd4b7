// Copyright 2026 The irj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `irj <subcommand> [options]`.
//
// Exit status is 0 on success, 1 on a domain, schema or file error and 2 on a
// usage error. Errors are written to `err` as a single JSON object
// {"error": {"kind", "module", "message"}}.

#ifndef IRJ_CLI_HPP_
#define IRJ_CLI_HPP_

#include <iosfwd>

namespace irj {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace irj

#endif  // IRJ_CLI_HPP_

// Copyright 2026 The subselect Authors.
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

#ifndef SUBSELECT_TOOLS_CLI_H_
#define SUBSELECT_TOOLS_CLI_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace subselect::cli {

struct CliInvocation {
  std::string function;                  // facility-location | feature-based
  long long k = 0;
  std::optional<std::string> concave;    // sqrt | log
  std::optional<std::string> similarity; // precomputed | squared-correlation | cosine
  std::string input;
  std::string format = "csv";            // csv | triples
  bool header = false;
  std::size_t naive_rounds = 0;
  std::optional<std::string> initial;
  std::string output;
  std::size_t parallelism = 1;
  bool verbose = false;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUsageError = 2;

// Parses command-line flags. On failure or --help, returns std::nullopt and
// sets `exit_status` (0 for --help); messages go to `out` / `err`.
std::optional<CliInvocation> ParseArgs(const std::vector<std::string>& args,
                                       std::ostream& out, std::ostream& err,
                                       int* exit_status);

// Runs one selection. The output file is written only on success. Progress
// goes to `err` when verbose.
int RunCli(const CliInvocation& invocation, std::ostream& err);

// Formats a gain for the output file: 17 significant digits, always with a
// decimal point or exponent so it reads back as a real.
std::string FormatGain(double gain);

}  // namespace subselect::cli

#endif  // SUBSELECT_TOOLS_CLI_H_

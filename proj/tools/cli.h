// Copyright 2026 The coref-forge Authors.
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

#ifndef COREF_FORGE_TOOLS_CLI_H_
#define COREF_FORGE_TOOLS_CLI_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace coref_forge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Settings shared by all subcommands. Precedence: command-line flags, then
// the file named by COREF_FORGE_CONFIG, then COREF_FORGE_LEXICON, then
// built-in defaults.
struct Config {
  std::optional<std::string> lexicon_path;
  uint64_t seed = 0;
  // "conll" or "jsonl"; empty means infer from the output file name.
  std::string format;
  int verbosity = 0;
};

using Environment = std::map<std::string, std::string>;

// Environment variables the CLI reads, taken from the process environment.
Environment ProcessEnvironment();

// Reads COREF_FORGE_LEXICON and the COREF_FORGE_CONFIG file (key=value lines
// with keys lexicon, seed, format, verbosity).
Config LoadConfig(const Environment& env);

// Runs one subcommand. args excludes the program name. Returns 0 on success,
// 1 on data or validation errors and 2 on usage errors. Output files are
// only written when the whole command succeeds.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err, const Environment& env);

}  // namespace coref_forge::cli

#endif  // COREF_FORGE_TOOLS_CLI_H_

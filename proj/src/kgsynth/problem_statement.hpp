// Copyright 2026 The kgsynth Authors.
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgsynth {

// Parsed problem statement (`.kgs` file). Grammar:
//
//   stmt  := key '=' value
//   value := string | '[' string (',' string)* ']'
//
// Strings are single-quoted (`\'` and `\\` escapes), a trailing backslash
// joins physical lines, and whitespace, newlines and `#` comments are
// insignificant between tokens.
struct ProblemStatement {
  std::vector<std::string> data_source_names;
  std::vector<std::string> requested_calculations;
  std::vector<std::string> program_requirements;
  std::string programming_language;
  std::string program_basename;
  // Optional; names of preferred code libraries.
  std::vector<std::string> library_preferences;

  bool operator==(const ProblemStatement&) const = default;
};

// Throws StatementError with the position of the offending token (or of
// the end of input for a missing key).
ProblemStatement parse_problem_statement(std::string_view text,
                                         std::string_view source = {});

// One `key = value` line per field, lists on a single line.
std::string to_canonical(const ProblemStatement& statement);

}  // namespace kgsynth

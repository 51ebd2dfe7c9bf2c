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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kgsynth/error.hpp"
#include "kgsynth/kb_views.hpp"
#include "kgsynth/problem_statement.hpp"

namespace kgsynth {

enum class ReportAction { kNone, kPrintValues };

struct Calculation {
  std::string label;
  AlgorithmInfo algorithm;
  CodeFunctionInfo function;

  bool operator==(const Calculation&) const = default;
};

struct BuildPlan {
  DataSourceInfo data_source;
  std::vector<Calculation> calculations;  // requested order
  CodeFunctionInfo reader_function;
  ReportAction report_action = ReportAction::kNone;
  // The exit action and the function bound to it (sys.exit for Python).
  std::string exit_action;
  std::int64_t exit_status = 0;
  CodeFunctionInfo exit_function;
  ProgramStructureInfo structure;
  LanguageInfo language;
  std::string program_basename;

  bool operator==(const BuildPlan&) const = default;
};

struct Violation {
  std::string constraint;  // input_numeric | min_input_count | inputs_same_quantity
  std::string detail;

  bool operator==(const Violation&) const = default;
};

// Empty when `algorithm` can consume the values of `source`.
std::vector<Violation> check_compatibility(const AlgorithmInfo& algorithm,
                                           const DataSourceInfo& source);

// Rank of a big-O class: O(1) < O(log n) < O(n) < O(n log n) < O(n^2) <
// anything unrecognised.
int complexity_rank(std::string_view big_o);

// Picks the single best candidate. A singleton is returned as is; otherwise
// the candidates with the lowest `rank` survive and more than one survivor
// raises ResolveError kAmbiguous. Without a rank every tie is ambiguous.
template <typename T>
const T& select_candidate(std::string_view kind, const std::vector<T>& candidates,
                          const std::function<std::string(const T&)>& describe,
                          const std::function<int(const T&)>& rank = {}) {
  if (candidates.empty())
    throw std::invalid_argument("select_candidate needs candidates");
  if (candidates.size() == 1) return candidates.front();
  std::vector<const T*> best;
  int best_rank = 0;
  for (const auto& c : candidates) {
    const int r = rank ? rank(c) : 0;
    if (best.empty() || r < best_rank) {
      best = {&c};
      best_rank = r;
    } else if (r == best_rank) {
      best.push_back(&c);
    }
  }
  if (best.size() == 1) return *best.front();
  std::vector<std::string> names;
  std::string message = "ambiguous " + std::string(kind) + ":";
  for (const T* c : best) {
    names.push_back(describe(*c));
    message += " " + names.back();
  }
  throw ResolveError(ResolveError::Kind::kAmbiguous, message, std::move(names));
}

const AlgorithmInfo& select_algorithm(const std::vector<AlgorithmInfo>& candidates);

// Matches `statement` against the knowledge base. Throws ResolveError.
BuildPlan resolve(const ProblemStatement& statement, const KbView& kb);

}  // namespace kgsynth

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

#include "kgsynth/resolver.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kgsynth/vocab.hpp"

namespace kgsynth {
namespace {

using Kind = ResolveError::Kind;

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string normalize_big_o(std::string_view text) {
  std::string out;
  for (char c : text)
    if (c != ' ') out += c;
  return out;
}

std::string describe_function(const CodeFunctionInfo& f) {
  return f.library.official_name + "." + f.callable_name;
}

// Functions for `purpose` in `family`; preferred libraries are tried in
// order before falling back to any library.
CodeFunctionInfo bind_function(const KbView& kb, const std::string& purpose,
                               const LanguageInfo& language,
                               const std::vector<std::string>& preferences) {
  std::vector<CodeFunctionInfo> candidates;
  for (const auto& lib : preferences) {
    candidates = kb.code_functions(purpose, language.family, lib);
    if (!candidates.empty()) break;
  }
  if (candidates.empty()) candidates = kb.code_functions(purpose, language.family);
  if (candidates.empty())
    throw ResolveError(Kind::kNoFunction,
                       "no " + language.family + " code function for purpose <" +
                           purpose + ">",
                       {purpose});
  return select_candidate<CodeFunctionInfo>("code function for <" + purpose + ">",
                                            candidates, describe_function);
}

DataSourceInfo resolve_data_source(const ProblemStatement& ps, const KbView& kb) {
  if (ps.data_source_names.size() != 1)
    throw ResolveError(Kind::kUnsupported,
                       "exactly one data source is supported, got " +
                           std::to_string(ps.data_source_names.size()),
                       ps.data_source_names);
  const auto& name = ps.data_source_names.front();
  auto sources = kb.data_sources(name);
  if (sources.empty())
    throw ResolveError(Kind::kNoDataSource, "no data source named '" + name + "'",
                       {name});
  return select_candidate<DataSourceInfo>(
      "data source '" + name + "'", sources,
      [](const DataSourceInfo& d) { return d.iri; });
}

Calculation resolve_calculation(const std::string& label, const DataSourceInfo& ds,
                                const KbView& kb) {
  auto candidates = kb.algorithms_by_label(label);
  if (candidates.empty())
    throw ResolveError(Kind::kNoAlgorithm, "no algorithm produces '" + label + "'",
                       {label});
  std::vector<AlgorithmInfo> compatible;
  std::vector<std::string> reasons;
  for (const auto& alg : candidates) {
    auto violations = check_compatibility(alg, ds);
    if (violations.empty()) {
      compatible.push_back(alg);
      continue;
    }
    for (const auto& v : violations) reasons.push_back(alg.name + ": " + v.constraint);
  }
  if (compatible.empty())
    throw ResolveError(Kind::kIncompatible,
                       "no algorithm for '" + label + "' accepts data source '" +
                           ds.name + "' (" + join(reasons, ", ") + ")",
                       reasons);
  return {label, select_algorithm(compatible), {}};
}

ProgramStructureInfo resolve_structure(const ProblemStatement& ps,
                                       const KbView& kb) {
  std::vector<ProgramStructureInfo> satisfying;
  for (auto& s : kb.program_structures()) {
    if (std::all_of(ps.program_requirements.begin(), ps.program_requirements.end(),
                    [&](const auto& r) { return s.satisfied_requirements.contains(r); }))
      satisfying.push_back(std::move(s));
  }
  if (satisfying.empty())
    throw ResolveError(Kind::kNoStructure,
                       "no program structure satisfies [" +
                           join(ps.program_requirements, ", ") + "]",
                       ps.program_requirements);
  // Fewest unrequested extras first; equal extras stay tied.
  return select_candidate<ProgramStructureInfo>(
      "program structure", satisfying,
      [](const ProgramStructureInfo& s) { return s.name; },
      [](const ProgramStructureInfo& s) {
        return static_cast<int>(s.satisfied_requirements.size());
      });
}

bool tag_matches(std::string_view requested, std::string_view tag) {
  if (tag == requested) return true;
  return tag.size() > requested.size() && tag.starts_with(requested) &&
         (tag[requested.size()] == '.' || tag[requested.size()] == '-');
}

LanguageInfo resolve_language(const ProblemStatement& ps, const KbView& kb) {
  std::vector<LanguageInfo> matching;
  for (auto& l : kb.languages())
    if (tag_matches(ps.programming_language, l.tag)) matching.push_back(std::move(l));
  if (matching.empty())
    throw ResolveError(Kind::kNoLanguage,
                       "no programming language tagged '" +
                           ps.programming_language + "'",
                       {ps.programming_language});
  // Most specific (longest) tag wins.
  return select_candidate<LanguageInfo>(
      "programming language", matching, [](const LanguageInfo& l) { return l.tag; },
      [&](const LanguageInfo& l) {
        // An exact tag wins; otherwise the most specific (longest) one.
        if (l.tag == ps.programming_language) return std::numeric_limits<int>::min();
        return -static_cast<int>(l.tag.size());
      });
}

}  // namespace

std::vector<Violation> check_compatibility(const AlgorithmInfo& alg,
                                           const DataSourceInfo& ds) {
  std::vector<Violation> out;
  if (alg.input_numeric && !ds.value_numeric)
    out.push_back({"input_numeric", "values of " + ds.name + " are not numeric"});
  const std::int64_t count = ds.data_rows * ds.values_per_row;
  if (count < alg.min_input_count)
    out.push_back({"min_input_count", std::to_string(count) + " < " +
                                          std::to_string(alg.min_input_count)});
  if (alg.inputs_same_quantity && ds.quantity_types.size() != 1)
    out.push_back({"inputs_same_quantity",
                   std::to_string(ds.quantity_types.size()) + " quantity types"});
  return out;
}

int complexity_rank(std::string_view big_o) {
  const std::string c = normalize_big_o(big_o);
  if (c == "O(1)") return 0;
  if (c == "O(logn)") return 1;
  if (c == "O(n)") return 2;
  if (c == "O(nlogn)") return 3;
  if (c == "O(n^2)" || c == "O(n²)") return 4;
  return 5;
}

const AlgorithmInfo& select_algorithm(const std::vector<AlgorithmInfo>& candidates) {
  return select_candidate<AlgorithmInfo>(
      "algorithm", candidates, [](const AlgorithmInfo& a) { return a.name; },
      [](const AlgorithmInfo& a) { return complexity_rank(a.time_complexity); });
}

BuildPlan resolve(const ProblemStatement& ps, const KbView& kb) {
  BuildPlan plan;
  plan.program_basename = ps.program_basename;
  plan.data_source = resolve_data_source(ps, kb);
  for (const auto& label : ps.requested_calculations)
    plan.calculations.push_back(resolve_calculation(label, plan.data_source, kb));
  plan.structure = resolve_structure(ps, kb);
  plan.language = resolve_language(ps, kb);

  const auto& ds = plan.data_source;
  std::vector<CodeFunctionInfo> readers;
  for (const auto& cap : kb.read_capabilities(ds.format, ds.value_datatype, ds.container)) {
    try {
      readers.push_back(bind_function(kb, cap, plan.language, ps.library_preferences));
    } catch (const ResolveError& e) {
      if (e.kind() != Kind::kNoFunction) throw;
    }
  }
  if (readers.empty())
    throw ResolveError(Kind::kNoFunction,
                       "no " + plan.language.family + " reader for data source '" +
                           ds.name + "'",
                       {ds.format, ds.value_datatype, ds.container});
  plan.reader_function =
      select_candidate<CodeFunctionInfo>("reader", readers, describe_function);

  for (auto& calc : plan.calculations)
    calc.function =
        bind_function(kb, calc.algorithm.iri, plan.language, ps.library_preferences);

  const auto& sections = plan.structure.sections;
  if (std::any_of(sections.begin(), sections.end(), [](const SectionInfo& s) {
        return s.purpose == kg::kReportResult;
      }))
    plan.report_action = ReportAction::kPrintValues;

  plan.exit_action = kb::kProgramExit;
  plan.exit_status = kb.exit_status(kb::kProgramExit).value_or(0);
  plan.exit_function =
      bind_function(kb, kb::kProgramExit, plan.language, ps.library_preferences);
  return plan;
}

}  // namespace kgsynth

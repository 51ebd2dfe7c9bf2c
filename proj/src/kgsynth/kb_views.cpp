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

#include "kgsynth/kb_views.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "kgsynth/error.hpp"

namespace kgsynth {
namespace {

const std::string& bound_iri(const Bindings& row, const std::string& name) {
  return row.at(name).text();
}

}  // namespace

std::optional<NamingPatternId> parse_naming_pattern_id(std::string_view text) {
  if (text == "literal-is-datasource-filename")
    return NamingPatternId::kLiteralIsDataSourceFilename;
  if (text == "datasource-filename-arg-to-reader")
    return NamingPatternId::kDataSourceFilenameArgToReader;
  if (text == "assign-function-return")
    return NamingPatternId::kAssignFunctionReturn;
  return std::nullopt;
}

std::string_view to_string(NamingPatternId id) {
  switch (id) {
    case NamingPatternId::kLiteralIsDataSourceFilename:
      return "literal-is-datasource-filename";
    case NamingPatternId::kDataSourceFilenameArgToReader:
      return "datasource-filename-arg-to-reader";
    case NamingPatternId::kAssignFunctionReturn:
      return "assign-function-return";
  }
  return "unknown";
}

std::vector<SectionInfo> ProgramStructureInfo::in_composition_order() const {
  auto out = sections;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.composition_order < b.composition_order;
  });
  return out;
}

std::vector<Term> KbView::objects(std::string_view subject,
                                  std::string_view predicate) const {
  std::vector<Term> out;
  for (const auto& row : store_.match({iri(std::string(subject)),
                                       iri(std::string(predicate)), var("o"),
                                       graph_term(graph_)}))
    out.push_back(row.at("o"));
  return out;
}

std::optional<Term> KbView::object(std::string_view subject,
                                   std::string_view predicate) const {
  auto all = objects(subject, predicate);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<std::string> KbView::string_of(std::string_view subject,
                                             std::string_view predicate) const {
  auto t = object(subject, predicate);
  if (!t) return std::nullopt;
  return t->text();
}

std::optional<std::int64_t> KbView::integer_of(std::string_view subject,
                                               std::string_view predicate) const {
  auto t = object(subject, predicate);
  return t ? t->as_integer() : std::nullopt;
}

std::optional<bool> KbView::boolean_of(std::string_view subject,
                                       std::string_view predicate) const {
  auto t = object(subject, predicate);
  return t ? t->as_boolean() : std::nullopt;
}

std::vector<std::string> KbView::subjects(std::string_view predicate,
                                          const Term& object) const {
  std::vector<std::string> out;
  for (const auto& row : store_.match(
           {var("s"), iri(std::string(predicate)), object, graph_term(graph_)}))
    out.push_back(row.at("s").text());
  return out;
}

DataSourceInfo KbView::read_data_source(const std::string& ds) const {
  DataSourceInfo info;
  info.iri = ds;
  info.name = string_of(ds, kg::kHasName).value_or("");
  info.container = string_of(ds, kg::kHasContainer).value_or("");
  info.format = string_of(ds, kg::kHasFormat).value_or("");
  info.encoding = string_of(ds, kg::kHasEncoding).value_or("");
  info.value_datatype = string_of(ds, kg::kHasValueDatatype).value_or("");
  info.value_numeric =
      !info.value_datatype.empty() &&
      boolean_of(info.value_datatype, kg::kIsNumeric).value_or(false);
  info.header_rows = integer_of(ds, kg::kHeaderRowCount).value_or(0);
  info.data_rows = integer_of(ds, kg::kDataRowCount).value_or(0);
  info.values_per_row = integer_of(ds, kg::kValuesPerRow).value_or(1);
  for (const auto& q : objects(ds, kg::kHasQuantityType))
    info.quantity_types.push_back(q.text());
  info.location = string_of(ds, kg::kLocation).value_or("");
  if (auto kind = string_of(ds, kg::kHasDataKind))
    info.data_kind_token = string_of(*kind, kg::kNamingToken).value_or("");
  if (!info.container.empty()) {
    if (auto role = string_of(info.container, kg::kNameRole))
      info.name_role_token = string_of(*role, kg::kNamingToken).value_or("");
  }
  return info;
}

std::vector<DataSourceInfo> KbView::data_sources(std::string_view name) const {
  std::vector<DataSourceInfo> out;
  const auto g = graph_term(graph_);
  for (const auto& row : store_.query(
           {{var("ds"), iri(rdf::kType), iri(kg::kDataSource), g},
            {var("ds"), iri(kg::kHasName), lit(std::string(name)), g}}))
    out.push_back(read_data_source(bound_iri(row, "ds")));
  return out;
}

AlgorithmInfo KbView::read_algorithm(const std::string& a) const {
  AlgorithmInfo info;
  info.iri = a;
  info.name = string_of(a, kg::kHasName).value_or("");
  for (const auto& d : objects(a, kg::kOutputDescription))
    info.output_descriptions.insert(d.text());
  info.min_input_count = integer_of(a, kg::kMinInputCount).value_or(1);
  info.input_numeric = boolean_of(a, kg::kRequiresNumericInput).value_or(false);
  info.inputs_same_quantity =
      boolean_of(a, kg::kRequiresSameQuantity).value_or(false);
  info.output_arity = integer_of(a, kg::kOutputArity).value_or(1);
  info.output_quantity = string_of(a, kg::kOutputQuantity).value_or("");
  info.time_complexity = string_of(a, kg::kTimeComplexity).value_or("");
  return info;
}

std::vector<AlgorithmInfo> KbView::algorithms_by_label(std::string_view label) const {
  std::vector<AlgorithmInfo> out;
  const auto g = graph_term(graph_);
  for (const auto& row : store_.query(
           {{var("a"), iri(rdf::kType), iri(kg::kAlgorithm), g},
            {var("a"), iri(kg::kOutputDescription), lit(std::string(label)), g}}))
    out.push_back(read_algorithm(bound_iri(row, "a")));
  return out;
}

std::optional<AlgorithmInfo> KbView::algorithm(std::string_view a) const {
  const auto g = graph_term(graph_);
  if (store_.match({iri(std::string(a)), iri(rdf::kType), iri(kg::kAlgorithm), g})
          .empty())
    return std::nullopt;
  return read_algorithm(std::string(a));
}

std::vector<AlgorithmInfo> KbView::algorithms() const {
  std::vector<AlgorithmInfo> out;
  for (const auto& a : subjects(rdf::kType, iri(kg::kAlgorithm)))
    out.push_back(read_algorithm(a));
  return out;
}

std::optional<LibraryInfo> KbView::library(std::string_view lib) const {
  auto name = string_of(lib, kg::kOfficialName);
  if (!name) return std::nullopt;
  LibraryInfo info;
  info.iri = std::string(lib);
  info.official_name = *name;
  info.alias = string_of(lib, kg::kAlias);
  auto kind = string_of(lib, kg::kLibraryKind);
  info.kind = kind == kb::term("StandardLibrary") ? LibraryKind::kStandardLibrary
                                                  : LibraryKind::kExternalPackage;
  return info;
}

CodeFunctionInfo KbView::read_code_function(const std::string& f) const {
  CodeFunctionInfo info;
  info.iri = f;
  info.callable_name = string_of(f, kg::kCallableName).value_or("");
  if (auto lib = string_of(f, kg::kInLibrary)) {
    info.library = library(*lib).value_or(LibraryInfo{*lib, "", {}, {}});
  }
  info.language = string_of(f, kg::kForLanguage).value_or("");
  info.purpose = string_of(f, kg::kHasPurpose).value_or("");
  std::vector<std::pair<std::int64_t, std::string>> args;
  for (const auto& arg : objects(f, kg::kHasArgument)) {
    args.emplace_back(integer_of(arg.text(), kg::kArgumentIndex).value_or(0),
                      string_of(arg.text(), kg::kArgumentRole).value_or(""));
  }
  std::sort(args.begin(), args.end());
  for (auto& [index, role] : args) info.argument_roles.push_back(std::move(role));
  info.return_role = string_of(f, kg::kReturnRole).value_or("");
  return info;
}

std::vector<CodeFunctionInfo> KbView::code_functions(
    std::string_view purpose, std::string_view language_family,
    std::optional<std::string_view> library_preference) const {
  std::vector<CodeFunctionInfo> out;
  const auto g = graph_term(graph_);
  for (const auto& row : store_.query(
           {{var("f"), iri(rdf::kType), iri(kg::kCodeFunction), g},
            {var("f"), iri(kg::kHasPurpose), iri(std::string(purpose)), g},
            {var("f"), iri(kg::kForLanguage), var("family"), g},
            {var("family"), iri(kg::kFamilyName),
             lit(std::string(language_family)), g}})) {
    auto info = read_code_function(bound_iri(row, "f"));
    if (library_preference && info.library.official_name != *library_preference)
      continue;
    out.push_back(std::move(info));
  }
  return out;
}

ProgramStructureInfo KbView::read_structure(const std::string& s) const {
  ProgramStructureInfo info;
  info.iri = s;
  info.name = string_of(s, kg::kHasName).value_or("");
  for (const auto& req : objects(s, kg::kSatisfiesRequirement)) {
    if (auto label = string_of(req.text(), rdfs::kLabel))
      info.satisfied_requirements.insert(*label);
  }
  for (const auto& slot : objects(s, kg::kHasSlot)) {
    SectionInfo section;
    section.iri = string_of(slot.text(), kg::kSlotSection).value_or("");
    section.name = string_of(section.iri, kg::kHasName).value_or("");
    section.purpose = string_of(section.iri, kg::kSectionPurpose).value_or("");
    section.emission_order = integer_of(slot.text(), kg::kEmissionOrder).value_or(0);
    section.composition_order =
        integer_of(slot.text(), kg::kCompositionOrder).value_or(0);
    info.sections.push_back(std::move(section));
  }
  std::sort(info.sections.begin(), info.sections.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.emission_order, a.iri) <
                     std::tie(b.emission_order, b.iri);
            });
  return info;
}

std::vector<ProgramStructureInfo> KbView::program_structures() const {
  std::vector<ProgramStructureInfo> out;
  for (const auto& s : subjects(rdfs::kSubClassOf, iri(kg::kProgramStructure)))
    out.push_back(read_structure(s));
  return out;
}

std::vector<LanguageInfo> KbView::languages() const {
  std::vector<LanguageInfo> out;
  for (const auto& l : subjects(rdf::kType, iri(kg::kProgrammingLanguage))) {
    LanguageInfo info;
    info.iri = l;
    info.tag = string_of(l, kg::kLanguageTag).value_or("");
    info.family_iri = string_of(l, kg::kInFamily).value_or("");
    if (!info.family_iri.empty())
      info.family = string_of(info.family_iri, kg::kFamilyName).value_or("");
    info.source_file_extension = string_of(l, kg::kSourceFileExtension).value_or("");
    info.paradigm = string_of(l, kg::kParadigm).value_or("");
    out.push_back(std::move(info));
  }
  return out;
}

std::vector<NamingPattern> KbView::naming_patterns() const {
  std::vector<NamingPattern> out;
  for (const auto& p : subjects(rdf::kType, iri(kg::kNamingPattern))) {
    auto id = parse_naming_pattern_id(string_of(p, kg::kPatternId).value_or(""));
    if (!id) continue;
    NamingPattern pattern{p, *id, string_of(p, kg::kJoiner).value_or("_"), {}};
    std::vector<std::pair<std::int64_t, std::string>> parts;
    for (const auto& c : objects(p, kg::kHasComponent))
      parts.emplace_back(integer_of(c.text(), kg::kComponentIndex).value_or(0),
                         string_of(c.text(), kg::kComponentKind).value_or(""));
    std::sort(parts.begin(), parts.end());
    for (const auto& [index, kind] : parts) {
      if (kind == kg::kDataKindToken)
        pattern.components.push_back(NamingComponent::kDataKind);
      else if (kind == kg::kNameRoleToken)
        pattern.components.push_back(NamingComponent::kNameRole);
      else if (kind == kg::kFunctionNameToken)
        pattern.components.push_back(NamingComponent::kFunctionName);
    }
    out.push_back(std::move(pattern));
  }
  return out;
}

std::vector<std::string> KbView::read_capabilities(
    std::string_view format, std::string_view value_datatype,
    std::string_view container) const {
  std::vector<std::string> out;
  const auto g = graph_term(graph_);
  for (const auto& row : store_.query(
           {{var("c"), iri(rdf::kType), iri(kg::kReadCapability), g},
            {var("c"), iri(kg::kReadsFormat), iri(std::string(format)), g},
            {var("c"), iri(kg::kReadsValueDatatype),
             iri(std::string(value_datatype)), g},
            {var("c"), iri(kg::kReadsContainer), iri(std::string(container)), g}}))
    out.push_back(bound_iri(row, "c"));
  return out;
}

std::optional<std::int64_t> KbView::exit_status(std::string_view action) const {
  return integer_of(action, kg::kExitStatus);
}

std::vector<std::string> KbView::validate() const {
  std::vector<std::string> problems;

  std::vector<std::string> families;
  for (const auto& f : subjects(rdf::kType, iri(kg::term("LanguageFamily")))) {
    if (auto name = string_of(f, kg::kFamilyName)) families.push_back(*name);
  }
  for (const auto& alg : algorithms()) {
    if (alg.min_input_count < 1)
      problems.push_back("algorithm " + alg.iri + " has minInputCount < 1");
    if (alg.output_descriptions.empty())
      problems.push_back("algorithm " + alg.iri + " has no output description");
    for (const auto& family : families) {
      if (code_functions(alg.iri, family).empty())
        problems.push_back("algorithm " + alg.iri + " has no " + family +
                           " implementation");
    }
  }

  for (const auto& f : subjects(rdf::kType, iri(kg::kCodeFunction))) {
    auto lib = string_of(f, kg::kInLibrary);
    if (!lib || !library(*lib))
      problems.push_back("code function " + f + " names no known library");
    if (objects(f, kg::kHasPurpose).size() != 1)
      problems.push_back("code function " + f + " must have exactly one purpose");
  }

  for (const auto& s : program_structures()) {
    std::vector<std::int64_t> emission, composition;
    for (const auto& section : s.sections) {
      if (section.name.empty())
        problems.push_back("structure " + s.iri + " has a slot without a section");
      emission.push_back(section.emission_order);
      composition.push_back(section.composition_order);
    }
    std::sort(emission.begin(), emission.end());
    std::sort(composition.begin(), composition.end());
    bool dense = true;
    for (std::size_t i = 0; i < emission.size(); ++i)
      dense = dense && emission[i] == static_cast<std::int64_t>(i + 1) &&
              composition[i] == static_cast<std::int64_t>(i + 1);
    if (!dense)
      problems.push_back("structure " + s.iri +
                         " orderings are not permutations of one section set");
  }

  std::set<NamingPatternId> seen;
  for (const auto& p : naming_patterns()) {
    if (!seen.insert(p.id).second)
      problems.push_back("naming pattern id " + std::string(to_string(p.id)) +
                         " is defined twice");
  }

  for (const auto& ds : subjects(rdf::kType, iri(kg::kDataSource))) {
    auto info = read_data_source(ds);
    if (info.data_rows < 0 || info.header_rows < 0)
      problems.push_back("data source " + ds + " has a negative row count");
  }
  return problems;
}

KbLoadResult load_knowledge_base(const std::filesystem::path& kb_dir,
                                 const std::filesystem::path& catalog,
                                 QuadStore& store) {
  if (!std::filesystem::is_directory(kb_dir))
    throw LoadError("knowledge base directory not found: " + kb_dir.string());
  std::vector<std::filesystem::path> entries;
  for (const auto& entry : std::filesystem::directory_iterator(kb_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ttl")
      entries.push_back(entry.path());
  }
  if (entries.empty())
    throw LoadError("no ontology files (*.ttl) in " + kb_dir.string());
  std::sort(entries.begin(), entries.end());

  KbLoadResult result;
  result.report = load_with_imports(entries, ImportCatalog::read(catalog), store,
                                    kCoreGraph);
  result.problems = KbView(store).validate();
  return result;
}

}  // namespace kgsynth

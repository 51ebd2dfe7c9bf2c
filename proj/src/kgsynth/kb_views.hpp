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

// Typed, read-only views over the knowledge base graph. Every view is a
// plain query; nothing here is cached, so views see the store as it is.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kgsynth/ontology_io.hpp"
#include "kgsynth/quad_store.hpp"

namespace kgsynth {

struct DataSourceInfo {
  std::string iri;
  std::string name;
  std::string container;
  std::string format;
  std::string encoding;
  std::string value_datatype;
  bool value_numeric = false;
  std::int64_t header_rows = 0;
  std::int64_t data_rows = 0;
  std::int64_t values_per_row = 1;
  std::vector<std::string> quantity_types;
  std::string location;
  // Naming tokens: the kind of data held ("input_data") and what the
  // source name is ("filename").
  std::string data_kind_token;
  std::string name_role_token;

  bool operator==(const DataSourceInfo&) const = default;
};

struct AlgorithmInfo {
  std::string iri;
  std::string name;
  std::set<std::string> output_descriptions;
  std::int64_t min_input_count = 1;
  bool input_numeric = false;
  bool inputs_same_quantity = false;
  std::int64_t output_arity = 1;
  std::string output_quantity;
  std::string time_complexity;

  bool operator==(const AlgorithmInfo&) const = default;
};

enum class LibraryKind { kExternalPackage, kStandardLibrary };

struct LibraryInfo {
  std::string iri;
  std::string official_name;
  std::optional<std::string> alias;
  LibraryKind kind = LibraryKind::kExternalPackage;

  bool operator==(const LibraryInfo&) const = default;
};

struct CodeFunctionInfo {
  std::string iri;
  std::string callable_name;
  LibraryInfo library;
  std::string language;  // language family IRI
  std::string purpose;
  std::vector<std::string> argument_roles;
  std::string return_role;

  bool operator==(const CodeFunctionInfo&) const = default;
};

struct SectionInfo {
  std::string iri;
  std::string name;
  std::string purpose;
  std::int64_t emission_order = 0;
  std::int64_t composition_order = 0;

  bool operator==(const SectionInfo&) const = default;
};

struct ProgramStructureInfo {
  std::string iri;
  std::string name;
  std::vector<SectionInfo> sections;  // in emission order
  std::set<std::string> satisfied_requirements;

  std::vector<SectionInfo> in_composition_order() const;
  bool operator==(const ProgramStructureInfo&) const = default;
};

struct LanguageInfo {
  std::string iri;
  std::string tag;
  std::string family;
  std::string family_iri;
  std::string source_file_extension;
  std::string paradigm;

  bool operator==(const LanguageInfo&) const = default;
};

enum class NamingPatternId {
  kLiteralIsDataSourceFilename,
  kDataSourceFilenameArgToReader,
  kAssignFunctionReturn,
};

enum class NamingComponent { kDataKind, kNameRole, kFunctionName };

struct NamingPattern {
  std::string iri;
  NamingPatternId id;
  std::string joiner;
  std::vector<NamingComponent> components;
};

std::optional<NamingPatternId> parse_naming_pattern_id(std::string_view text);
std::string_view to_string(NamingPatternId id);

// Reads the KB graph of `store`. All views default to the core graph.
class KbView {
 public:
  explicit KbView(const QuadStore& store,
                  std::string_view graph = kCoreGraph)
      : store_(store), graph_(graph) {}

  const QuadStore& store() const { return store_; }
  const std::string& graph() const { return graph_; }

  std::vector<DataSourceInfo> data_sources(std::string_view name) const;
  std::vector<AlgorithmInfo> algorithms_by_label(std::string_view label) const;
  std::optional<AlgorithmInfo> algorithm(std::string_view iri) const;
  std::vector<AlgorithmInfo> algorithms() const;
  std::vector<CodeFunctionInfo> code_functions(
      std::string_view purpose, std::string_view language_family,
      std::optional<std::string_view> library_preference = std::nullopt) const;
  std::optional<LibraryInfo> library(std::string_view iri) const;
  std::vector<ProgramStructureInfo> program_structures() const;
  std::vector<LanguageInfo> languages() const;
  std::vector<NamingPattern> naming_patterns() const;
  // Reading capabilities for a (format, value datatype, container) triple.
  std::vector<std::string> read_capabilities(std::string_view format,
                                             std::string_view value_datatype,
                                             std::string_view container) const;
  std::optional<std::int64_t> exit_status(std::string_view action) const;

  // Consistency problems; empty when the KB is usable.
  std::vector<std::string> validate() const;

  // Low-level helpers shared with the reasoning stages.
  std::vector<Term> objects(std::string_view subject, std::string_view predicate) const;
  std::optional<Term> object(std::string_view subject, std::string_view predicate) const;
  std::optional<std::string> string_of(std::string_view subject,
                                       std::string_view predicate) const;
  std::optional<std::int64_t> integer_of(std::string_view subject,
                                         std::string_view predicate) const;
  std::optional<bool> boolean_of(std::string_view subject,
                                 std::string_view predicate) const;
  std::vector<std::string> subjects(std::string_view predicate,
                                    const Term& object) const;

 private:
  DataSourceInfo read_data_source(const std::string& iri) const;
  AlgorithmInfo read_algorithm(const std::string& iri) const;
  CodeFunctionInfo read_code_function(const std::string& iri) const;
  ProgramStructureInfo read_structure(const std::string& iri) const;

  const QuadStore& store_;
  std::string graph_;
};

struct KbLoadResult {
  LoadReport report;
  std::vector<std::string> problems;
};

// Loads every *.ttl file of `kb_dir` (imports resolved through `catalog`)
// into the core graph. Throws LoadError when the directory holds no
// ontology files.
KbLoadResult load_knowledge_base(const std::filesystem::path& kb_dir,
                                 const std::filesystem::path& catalog,
                                 QuadStore& store);

}  // namespace kgsynth

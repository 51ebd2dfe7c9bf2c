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

// Concrete rendering of a composed program. Statement shapes (which
// variation, which elements, in what order) come from the knowledge base;
// the rendered program is written to its own named graph and emitted by
// walking that graph.

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "kgsynth/composer.hpp"
#include "kgsynth/kb_views.hpp"
#include "kgsynth/quad_store.hpp"

namespace kgsynth {

struct Element {
  std::string kind;  // kg:Keyword, kg:Punctuation or kg:Slot
  std::string text;
  std::string separator_before;

  bool operator==(const Element&) const = default;
};

struct ImportPlain {
  std::string official_name;
  bool operator==(const ImportPlain&) const = default;
};

struct ImportAliased {
  std::string official_name;
  std::string alias;
  bool operator==(const ImportAliased&) const = default;
};

struct AssignExpr {
  std::string lhs;
  std::string rhs;
  bool operator==(const AssignExpr&) const = default;
};

struct CallStmt {
  std::string callee;
  std::vector<std::string> arguments;
  bool operator==(const CallStmt&) const = default;
};

using ConcreteForm = std::variant<ImportPlain, ImportAliased, AssignExpr, CallStmt>;

struct ConcreteStatement {
  std::string variation;  // KB statement variation IRI
  ConcreteForm form;
  std::vector<Element> elements;  // in element order

  std::string text() const;
  bool operator==(const ConcreteStatement&) const = default;
};

struct PlrSection {
  std::string section;  // section entity IRI
  std::int64_t emission_index = 0;
  std::vector<ConcreteStatement> statements;

  bool operator==(const PlrSection&) const = default;
};

struct PlrProgram {
  std::string graph;
  std::string language;  // language IRI
  std::vector<PlrSection> sections;  // emission order

  std::size_t statement_count() const;
  bool operator==(const PlrProgram&) const = default;
};

// The statement variations the KB holds for one language family.
class StatementTemplates {
 public:
  struct Variation {
    std::string iri;
    std::string condition;  // empty when unconditional
    std::vector<Element> elements;  // slots carry the slot name as text
  };

  // Throws RenderError kUnsupportedLanguage when the family has none.
  StatementTemplates(const KbView& kb, const LanguageInfo& language);

  const Variation& pick(const std::string& kind,
                        const std::string& condition = {}) const;
  // Elements of the chosen variation with slots filled from `slots`.
  ConcreteStatement instantiate(const std::string& kind,
                                const std::map<std::string, std::string>& slots,
                                const std::string& condition = {}) const;
  std::string expression(const std::string& kind,
                         const std::map<std::string, std::string>& slots) const;

  const std::string& argument_separator() const { return argument_separator_; }
  const std::string& report_label_suffix() const { return report_label_suffix_; }

 private:
  std::map<std::string, std::vector<Variation>> by_kind_;
  std::string family_;
  std::string argument_separator_;
  std::string report_label_suffix_;
};

// One import per library, ascending by official name (byte order).
std::vector<ConcreteStatement> build_import_statements(
    std::vector<LibraryInfo> libraries, const StatementTemplates& templates);

// Maps every abstract statement to one concrete statement and writes the
// result into the program's rendered graph (cleared first).
PlrProgram render(const PlaProgram& pla, const LanguageInfo& language,
                  const KbView& kb, QuadStore& store);

// Rebuilds a rendered program from its named graph.
PlrProgram read_plr(const QuadStore& store, const std::string& graph);

// One statement per line, LF endings, one trailing newline; `blank_lines`
// separates non-empty sections with an empty line.
std::string emit(const PlrProgram& plr, bool blank_lines = false);

// Writes `text` to out_dir/basename+extension. Refuses to replace an
// existing file unless `force`. Throws WriteError.
std::filesystem::path write_source(const std::string& text,
                                   const std::string& basename,
                                   const LanguageInfo& language,
                                   const std::filesystem::path& out_dir,
                                   bool force = false);

}  // namespace kgsynth

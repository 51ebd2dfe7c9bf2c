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

// Language-agnostic program composition. The program is built as quads in
// its own named graph; the structs below mirror what was written there.

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kgsynth/kb_views.hpp"
#include "kgsynth/quad_store.hpp"
#include "kgsynth/resolver.hpp"

namespace kgsynth {

struct PlaVariable {
  std::string iri;
  std::string name;

  bool operator==(const PlaVariable&) const = default;
};

struct PlaArgument {
  std::variant<PlaVariable, std::string> value;  // variable or string literal

  bool operator==(const PlaArgument&) const = default;
};

struct AssignLiteral {
  PlaVariable target;
  std::string value;
  std::string role;  // naming token of what the literal is ("filename")

  bool operator==(const AssignLiteral&) const = default;
};

struct AssignCall {
  PlaVariable target;
  CodeFunctionInfo function;
  std::vector<PlaArgument> arguments;

  bool operator==(const AssignCall&) const = default;
};

struct ReportValue {
  std::string label;
  PlaVariable source;

  bool operator==(const ReportValue&) const = default;
};

struct ProgramExit {
  std::string action;
  std::int64_t status = 0;
  CodeFunctionInfo function;

  bool operator==(const ProgramExit&) const = default;
};

struct ImportDirective {
  LibraryInfo library;

  bool operator==(const ImportDirective&) const = default;
};

using AbstractBody =
    std::variant<AssignLiteral, AssignCall, ReportValue, ProgramExit, ImportDirective>;

struct AbstractStatement {
  std::string iri;
  std::string section;             // section entity IRI
  std::int64_t order_index = 0;    // position within the section, from 1
  std::int64_t composition_seq = 0;  // global creation order, from 1
  AbstractBody body;

  bool operator==(const AbstractStatement&) const = default;
};

struct PlaSection {
  SectionInfo info;
  std::string iri;
  std::int64_t composition_index = 0;  // order in which it was composed, from 1
  std::vector<AbstractStatement> statements;

  bool operator==(const PlaSection&) const = default;
};

struct PlaProgram {
  std::string graph;
  std::string program_iri;
  std::string basename;
  std::string structure;
  std::vector<PlaSection> sections;  // emission order
  std::vector<LibraryInfo> referenced_libraries;  // by official name

  std::size_t statement_count() const;
  bool operator==(const PlaProgram&) const = default;
};

// Graph IRIs for the two program representations of `basename`.
std::string pla_graph_iri(std::string_view basename);
std::string plr_graph_iri(std::string_view basename);

struct NamingContext {
  NamingPatternId pattern;
  std::string data_kind_token;
  std::string name_role_token;
  std::string function_name;
};

// Names already handed out within one program.
class NameScope {
 public:
  // Returns `base`, or `base_2`, `base_3`, ... when taken.
  std::string claim(const std::string& base);
  bool contains(const std::string& name) const { return taken_.contains(name); }

 private:
  std::set<std::string> taken_;
};

// Applies the naming rule for `context`. Throws ComposeError when no rule
// applies or a component token is missing.
std::string derive_variable_name(const std::vector<NamingPattern>& rules,
                                 const NamingContext& context, NameScope& scope);

// Composes `plan` into a fresh named graph of `store` (cleared first).
PlaProgram compose(const BuildPlan& plan, const KbView& kb, QuadStore& store);

}  // namespace kgsynth

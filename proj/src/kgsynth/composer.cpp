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

#include "kgsynth/composer.hpp"

#include <algorithm>
#include <optional>

#include "kgsynth/error.hpp"
#include "kgsynth/vocab.hpp"

namespace kgsynth {
namespace {

class Composer {
 public:
  Composer(const BuildPlan& plan, const KbView& kb, QuadStore& store)
      : plan_(plan), rules_(kb.naming_patterns()), store_(store) {
    pla_.basename = plan.program_basename;
    pla_.graph = pla_graph_iri(plan.program_basename);
    pla_.program_iri = pla_.graph + "#program";
    pla_.structure = plan.structure.iri;
  }

  PlaProgram run() {
    store_.clear_graph(pla_.graph);
    add(pla_.program_iri, rdf::kType, iri(pla::kProgram));
    add(pla_.program_iri, pla::kStructure, iri(plan_.structure.iri));
    add(pla_.program_iri, pla::kBasename, lit(plan_.program_basename));

    for (const auto& info : plan_.structure.sections) {
      PlaSection section;
      section.info = info;
      section.iri = pla_.graph + "#section-" + info.name;
      pla_.sections.push_back(std::move(section));
    }
    if (!plan_.calculations.empty() && !find_section(kg::kCalculateQuantity))
      throw ComposeError("structure " + plan_.structure.name +
                         " has no section for the requested calculations");

    // Import directives depend on everything else, so their section is
    // finalized after all others whatever its place in the structure.
    std::vector<PlaSection*> order;
    for (auto& s : pla_.sections) order.push_back(&s);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
      const bool ai = a->info.purpose == kg::kImportLibraries;
      const bool bi = b->info.purpose == kg::kImportLibraries;
      if (ai != bi) return bi;
      return a->info.composition_order < b->info.composition_order;
    });
    std::int64_t index = 0;
    for (PlaSection* s : order) {
      s->composition_index = ++index;
      compose_section(*s);
    }

    for (std::size_t i = 0; i < pla_.sections.size(); ++i) {
      const auto& s = pla_.sections[i];
      add(pla_.program_iri, pla::kHasSection, iri(s.iri));
      add(s.iri, rdf::kType, iri(pla::kSection));
      add(s.iri, pla::kSectionEntity, iri(s.info.iri));
      add(s.iri, pla::kEmissionIndex, Term::integer(static_cast<std::int64_t>(i + 1)));
      add(s.iri, pla::kCompositionIndex, Term::integer(s.composition_index));
    }
    for (const auto& lib : pla_.referenced_libraries)
      add(pla_.program_iri, pla::kReferencesLibrary, iri(lib.iri));
    return std::move(pla_);
  }

 private:
  PlaSection* find_section(const std::string& purpose) {
    for (auto& s : pla_.sections)
      if (s.info.purpose == purpose) return &s;
    return nullptr;
  }

  void add(const std::string& s, const std::string& p, Term o) {
    store_.insert({iri(s), iri(p), std::move(o), pla_.graph});
  }

  void note_library(const LibraryInfo& lib) {
    auto& libs = pla_.referenced_libraries;
    if (std::any_of(libs.begin(), libs.end(),
                    [&](const auto& l) { return l.iri == lib.iri; }))
      return;
    libs.push_back(lib);
  }

  PlaVariable variable(const NamingContext& context) {
    PlaVariable v;
    v.name = derive_variable_name(rules_, context, names_);
    v.iri = pla_.graph + "#var-" + v.name;
    add(v.iri, rdf::kType, iri(pla::kVariable));
    add(v.iri, pla::kName, lit(v.name));
    return v;
  }

  // Function arguments are bound by position; every shipped function takes
  // the single value produced by the previous step.
  AssignCall call(const CodeFunctionInfo& f, PlaVariable target,
                  std::vector<PlaArgument> arguments) {
    if (f.argument_roles.size() != arguments.size())
      throw ComposeError(f.library.official_name + "." + f.callable_name +
                         " takes " + std::to_string(f.argument_roles.size()) +
                         " arguments, " + std::to_string(arguments.size()) +
                         " available");
    note_library(f.library);
    return {std::move(target), f, std::move(arguments)};
  }

  void append(PlaSection& section, AbstractBody body) {
    AbstractStatement st;
    st.section = section.info.iri;
    st.order_index = static_cast<std::int64_t>(section.statements.size()) + 1;
    st.composition_seq = ++seq_;
    st.iri = pla_.graph + "#stmt-" + std::to_string(st.composition_seq);
    st.body = std::move(body);
    write_statement(section, st);
    section.statements.push_back(std::move(st));
  }

  void write_statement(const PlaSection& section, const AbstractStatement& st) {
    const std::string& n = st.iri;
    add(n, pla::kInSection, iri(section.iri));
    add(n, pla::kOrderIndex, Term::integer(st.order_index));
    add(n, pla::kCompositionSeq, Term::integer(st.composition_seq));
    std::visit(
        [&](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, AssignLiteral>) {
            add(n, rdf::kType, iri(pla::kAssignLiteral));
            add(n, pla::kTarget, iri(b.target.iri));
            add(n, pla::kLiteralValue, lit(b.value));
            add(n, pla::kLiteralRole, lit(b.role));
          } else if constexpr (std::is_same_v<T, AssignCall>) {
            add(n, rdf::kType, iri(pla::kAssignCall));
            add(n, pla::kTarget, iri(b.target.iri));
            add(n, pla::kFunction, iri(b.function.iri));
            for (std::size_t i = 0; i < b.arguments.size(); ++i) {
              const std::string arg = n + "-arg" + std::to_string(i + 1);
              add(n, pla::kHasArgument, iri(arg));
              add(arg, rdf::kType, iri(pla::kArgument));
              add(arg, pla::kArgumentIndex,
                  Term::integer(static_cast<std::int64_t>(i + 1)));
              if (const auto* v = std::get_if<PlaVariable>(&b.arguments[i].value))
                add(arg, pla::kArgumentVariable, iri(v->iri));
              else
                add(arg, pla::kArgumentLiteral,
                    lit(std::get<std::string>(b.arguments[i].value)));
            }
          } else if constexpr (std::is_same_v<T, ReportValue>) {
            add(n, rdf::kType, iri(pla::kReportValue));
            add(n, pla::kAction, iri(kb::kReportValues));
            add(n, pla::kLabel, lit(b.label));
            add(n, pla::kSource, iri(b.source.iri));
          } else if constexpr (std::is_same_v<T, ProgramExit>) {
            add(n, rdf::kType, iri(pla::kProgramExit));
            add(n, pla::kAction, iri(b.action));
            add(n, pla::kExitStatus, Term::integer(b.status));
            add(n, pla::kFunction, iri(b.function.iri));
          } else {
            add(n, rdf::kType, iri(pla::kImportDirective));
            add(n, pla::kLibrary, iri(b.library.iri));
          }
        },
        st.body);
  }

  void compose_section(PlaSection& section) {
    const auto& purpose = section.info.purpose;
    const auto& ds = plan_.data_source;
    if (purpose == kg::kReadInput) {
      filename_ = variable({NamingPatternId::kLiteralIsDataSourceFilename,
                            ds.data_kind_token, ds.name_role_token, ""});
      append(section, AssignLiteral{*filename_, ds.name, ds.name_role_token});
      auto data = variable(
          {NamingPatternId::kDataSourceFilenameArgToReader, ds.data_kind_token, "", ""});
      append(section, call(plan_.reader_function, data, {{*filename_}}));
      data_ = data;
    } else if (purpose == kg::kCalculateQuantity) {
      if (!data_ && !plan_.calculations.empty())
        throw ComposeError("calculations need the input data read first");
      for (const auto& calc : plan_.calculations) {
        auto result = variable({NamingPatternId::kAssignFunctionReturn, "", "",
                                calc.function.callable_name});
        append(section, call(calc.function, result, {{*data_}}));
        results_.push_back(result);
      }
    } else if (purpose == kg::kReportResult) {
      if (plan_.report_action != ReportAction::kPrintValues) return;
      for (const auto& r : results_) append(section, ReportValue{r.name, r});
    } else if (purpose == kg::kCleanUpProgram) {
      note_library(plan_.exit_function.library);
      append(section,
             ProgramExit{plan_.exit_action, plan_.exit_status, plan_.exit_function});
    } else if (purpose == kg::kImportLibraries) {
      auto& libs = pla_.referenced_libraries;
      std::sort(libs.begin(), libs.end(), [](const auto& a, const auto& b) {
        return a.official_name < b.official_name;
      });
      for (const auto& lib : libs) append(section, ImportDirective{lib});
    } else {
      throw ComposeError("section " + section.info.name + " has unknown purpose <" +
                         purpose + ">");
    }
  }

  const BuildPlan& plan_;
  std::vector<NamingPattern> rules_;
  QuadStore& store_;
  PlaProgram pla_;
  NameScope names_;
  std::int64_t seq_ = 0;
  std::optional<PlaVariable> filename_;
  std::optional<PlaVariable> data_;
  std::vector<PlaVariable> results_;
};

}  // namespace

std::size_t PlaProgram::statement_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.statements.size();
  return n;
}

PlaProgram compose(const BuildPlan& plan, const KbView& kb, QuadStore& store) {
  return Composer(plan, kb, store).run();
}

std::string pla_graph_iri(std::string_view basename) {
  return std::string(kProgramBase) + std::string(basename) + "-pla";
}

std::string plr_graph_iri(std::string_view basename) {
  return std::string(kProgramBase) + std::string(basename) + "-plr";
}

std::string NameScope::claim(const std::string& base) {
  std::string name = base;
  for (int n = 2; taken_.contains(name); ++n) name = base + "_" + std::to_string(n);
  taken_.insert(name);
  return name;
}

std::string derive_variable_name(const std::vector<NamingPattern>& rules,
                                 const NamingContext& context, NameScope& scope) {
  auto rule = std::find_if(rules.begin(), rules.end(),
                           [&](const auto& r) { return r.id == context.pattern; });
  if (rule == rules.end())
    throw ComposeError("unnamed variable: no naming rule '" +
                       std::string(to_string(context.pattern)) + "'");
  std::string base;
  for (std::size_t i = 0; i < rule->components.size(); ++i) {
    const std::string* token = nullptr;
    switch (rule->components[i]) {
      case NamingComponent::kDataKind: token = &context.data_kind_token; break;
      case NamingComponent::kNameRole: token = &context.name_role_token; break;
      case NamingComponent::kFunctionName: token = &context.function_name; break;
    }
    if (token->empty())
      throw ComposeError("unnamed variable: rule '" +
                         std::string(to_string(context.pattern)) +
                         "' is missing a component");
    if (i) base += rule->joiner;
    base += *token;
  }
  if (base.empty())
    throw ComposeError("unnamed variable: rule '" +
                       std::string(to_string(context.pattern)) + "' has no components");
  return scope.claim(base);
}

}  // namespace kgsynth

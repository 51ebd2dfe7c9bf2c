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

#include "kgsynth/renderer.hpp"

#include <algorithm>
#include <fstream>
#include <system_error>
#include <tuple>

#include "kgsynth/error.hpp"
#include "kgsynth/vocab.hpp"

namespace kgsynth {
namespace {

std::string string_literal_body(std::string_view value) {
  std::string out;
  for (char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string form_name(const ConcreteForm& form) {
  static const char* names[] = {"ImportPlain", "ImportAliased", "AssignExpr", "CallStmt"};
  return names[form.index()];
}

class Renderer {
 public:
  Renderer(const PlaProgram& pla, const LanguageInfo& language, const KbView& kb,
           QuadStore& store)
      : pla_(pla), language_(language), templates_(kb, language), store_(store) {}

  PlrProgram run() {
    PlrProgram plr;
    plr.graph = plr_graph_iri(pla_.basename);
    plr.language = language_.iri;
    for (std::size_t i = 0; i < pla_.sections.size(); ++i) {
      const auto& in = pla_.sections[i];
      PlrSection out;
      out.section = in.info.iri;
      out.emission_index = static_cast<std::int64_t>(i + 1);
      for (const auto& st : in.statements) out.statements.push_back(map(st));
      plr.sections.push_back(std::move(out));
    }
    write(plr);
    return plr;
  }

 private:
  std::string library_ref(const LibraryInfo& lib) const {
    return lib.alias ? *lib.alias : lib.official_name;
  }

  std::string callee(const CodeFunctionInfo& f) const {
    return templates_.expression(
        kg::kQualifiedName,
        {{"qualifier", library_ref(f.library)}, {"name", f.callable_name}});
  }

  std::string string_literal(std::string_view value) const {
    return templates_.expression(kg::kStringLiteralExpression,
                                 {{"value", string_literal_body(value)}});
  }

  std::string join_arguments(const std::vector<std::string>& args) const {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += templates_.argument_separator();
      out += args[i];
    }
    return out;
  }

  ConcreteStatement map(const AbstractStatement& st) const {
    return std::visit(
        [&](const auto& b) -> ConcreteStatement {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, ImportDirective>) {
            return build_import_statements({b.library}, templates_).front();
          } else if constexpr (std::is_same_v<T, AssignLiteral>) {
            const auto rhs = string_literal(b.value);
            auto c = templates_.instantiate(kg::kAssignmentStatement,
                                            {{"lhs", b.target.name}, {"rhs", rhs}});
            c.form = AssignExpr{b.target.name, rhs};
            return c;
          } else if constexpr (std::is_same_v<T, AssignCall>) {
            std::vector<std::string> args;
            for (const auto& a : b.arguments) {
              if (const auto* v = std::get_if<PlaVariable>(&a.value))
                args.push_back(v->name);
              else
                args.push_back(string_literal(std::get<std::string>(a.value)));
            }
            const auto rhs = templates_.expression(
                kg::kCallExpression,
                {{"callee", callee(b.function)}, {"arguments", join_arguments(args)}});
            auto c = templates_.instantiate(kg::kAssignmentStatement,
                                            {{"lhs", b.target.name}, {"rhs", rhs}});
            c.form = AssignExpr{b.target.name, rhs};
            return c;
          } else if constexpr (std::is_same_v<T, ReportValue>) {
            std::vector<std::string> args = {
                string_literal(b.label + templates_.report_label_suffix()),
                b.source.name};
            auto c = templates_.instantiate(kg::kReportStatement,
                                            {{"arguments", join_arguments(args)}});
            // The callee is the keyword element of the report form.
            std::string name;
            for (const auto& e : c.elements)
              if (e.kind == kg::term("Keyword")) name = e.text;
            c.form = CallStmt{name, std::move(args)};
            return c;
          } else if constexpr (std::is_same_v<T, ProgramExit>) {
            if (b.function.callable_name.empty())
              throw RenderError(RenderError::Kind::kUnmappableStatement,
                                "program exit has no bound function");
            std::vector<std::string> args = {templates_.expression(
                kg::kIntegerLiteralExpression, {{"value", std::to_string(b.status)}})};
            const auto name = callee(b.function);
            auto c = templates_.instantiate(
                kg::kCallStatement,
                {{"callee", name}, {"arguments", join_arguments(args)}});
            c.form = CallStmt{name, std::move(args)};
            return c;
          } else {
            static_assert(std::is_same_v<T, void>, "unhandled statement");
          }
        },
        st.body);
  }

  void add(const std::string& graph, const std::string& s, const std::string& p,
           Term o) {
    store_.insert({iri(s), iri(p), std::move(o), graph});
  }

  void write(const PlrProgram& plr) {
    const auto& g = plr.graph;
    store_.clear_graph(g);
    const std::string program = g + "#program";
    add(g, program, rdf::kType, iri(plr::kProgram));
    add(g, program, plr::kLanguage, iri(plr.language));
    for (const auto& section : plr.sections) {
      for (std::size_t i = 0; i < section.statements.size(); ++i) {
        const auto& st = section.statements[i];
        const std::string n = g + "#stmt-" + std::to_string(section.emission_index) +
                              "-" + std::to_string(i + 1);
        add(g, program, plr::kHasStatement, iri(n));
        add(g, n, rdf::kType, iri(plr::kStatement));
        add(g, n, plr::kStatementForm, lit(form_name(st.form)));
        add(g, n, plr::kVariation, iri(st.variation));
        add(g, n, plr::kSection, iri(section.section));
        add(g, n, plr::kSectionEmissionIndex, Term::integer(section.emission_index));
        add(g, n, plr::kOrderIndex, Term::integer(static_cast<std::int64_t>(i + 1)));
        std::visit(
            [&](const auto& f) {
              using T = std::decay_t<decltype(f)>;
              if constexpr (std::is_same_v<T, ImportPlain>) {
                add(g, n, plr::kOfficialName, lit(f.official_name));
              } else if constexpr (std::is_same_v<T, ImportAliased>) {
                add(g, n, plr::kOfficialName, lit(f.official_name));
                add(g, n, plr::kAlias, lit(f.alias));
              } else if constexpr (std::is_same_v<T, AssignExpr>) {
                add(g, n, plr::kLhs, lit(f.lhs));
                add(g, n, plr::kRhs, lit(f.rhs));
              } else {
                add(g, n, plr::kCallee, lit(f.callee));
                for (std::size_t a = 0; a < f.arguments.size(); ++a) {
                  const std::string arg = n + "-arg" + std::to_string(a + 1);
                  add(g, n, plr::kHasArgument, iri(arg));
                  add(g, arg, plr::kArgumentIndex,
                      Term::integer(static_cast<std::int64_t>(a + 1)));
                  add(g, arg, plr::kArgumentText, lit(f.arguments[a]));
                }
              }
            },
            st.form);
        for (std::size_t e = 0; e < st.elements.size(); ++e) {
          const auto& el = st.elements[e];
          const std::string en = n + "-el" + std::to_string(e + 1);
          add(g, n, plr::kHasElement, iri(en));
          add(g, en, rdf::kType, iri(plr::kElement));
          add(g, en, plr::kElementOrder, Term::integer(static_cast<std::int64_t>(e + 1)));
          add(g, en, kg::kElementKind, iri(el.kind));
          add(g, en, plr::kElementText, lit(el.text));
          if (!el.separator_before.empty())
            add(g, en, plr::kSeparatorBefore, lit(el.separator_before));
        }
      }
    }
  }

  const PlaProgram& pla_;
  const LanguageInfo& language_;
  StatementTemplates templates_;
  QuadStore& store_;
};

}  // namespace

std::string ConcreteStatement::text() const {
  std::string out;
  for (const auto& e : elements) out += e.separator_before + e.text;
  return out;
}

std::size_t PlrProgram::statement_count() const {
  std::size_t n = 0;
  for (const auto& s : sections) n += s.statements.size();
  return n;
}

StatementTemplates::StatementTemplates(const KbView& kb, const LanguageInfo& language)
    : family_(language.family) {
  const auto g = graph_term(kb.graph());
  for (const auto& row : kb.store().query(
           {{var("v"), iri(rdf::kType), iri(kg::kStatementVariation), g},
            {var("v"), iri(kg::kForLanguage), iri(language.family_iri), g},
            {var("v"), iri(kg::kStatementKind), var("kind"), g}})) {
    Variation v;
    v.iri = row.at("v").text();
    v.condition = kb.string_of(v.iri, kg::kVariationCondition).value_or("");
    std::vector<std::pair<std::int64_t, Element>> elements;
    for (const auto& el : kb.objects(v.iri, kg::kHasElement)) {
      const auto& e = el.text();
      Element element;
      element.kind = kb.string_of(e, kg::kElementKind).value_or("");
      element.text = element.kind == kg::kSlotElement
                         ? kb.string_of(e, kg::kSlotName).value_or("")
                         : kb.string_of(e, kg::kElementText).value_or("");
      element.separator_before = kb.string_of(e, kg::kSeparatorBefore).value_or("");
      elements.emplace_back(kb.integer_of(e, kg::kElementOrder).value_or(0),
                            std::move(element));
    }
    std::stable_sort(elements.begin(), elements.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [order, element] : elements) v.elements.push_back(std::move(element));
    by_kind_[row.at("kind").text()].push_back(std::move(v));
  }
  if (by_kind_.empty())
    throw RenderError(RenderError::Kind::kUnsupportedLanguage,
                      "no statement forms for language family '" + language.family +
                          "'");
  argument_separator_ =
      kb.string_of(language.family_iri, kg::kArgumentSeparator).value_or(",");
  report_label_suffix_ =
      kb.string_of(language.family_iri, kg::kReportLabelSuffix).value_or(" = ");
}

const StatementTemplates::Variation& StatementTemplates::pick(
    const std::string& kind, const std::string& condition) const {
  auto it = by_kind_.find(kind);
  if (it != by_kind_.end()) {
    const Variation* fallback = nullptr;
    for (const auto& v : it->second) {
      if (v.condition == condition && !condition.empty()) return v;
      if (v.condition.empty()) fallback = &v;
    }
    if (fallback) return *fallback;
  }
  throw RenderError(RenderError::Kind::kUnmappableStatement,
                    "no " + family_ + " statement form for <" + kind + ">" +
                        (condition.empty() ? "" : " with <" + condition + ">"));
}

ConcreteStatement StatementTemplates::instantiate(
    const std::string& kind, const std::map<std::string, std::string>& slots,
    const std::string& condition) const {
  const auto& v = pick(kind, condition);
  ConcreteStatement out;
  out.variation = v.iri;
  for (auto e : v.elements) {
    if (e.kind == kg::kSlotElement) {
      auto it = slots.find(e.text);
      if (it == slots.end())
        throw RenderError(RenderError::Kind::kUnmappableStatement,
                          "statement form <" + v.iri + "> needs slot '" + e.text + "'");
      e.text = it->second;
    }
    out.elements.push_back(std::move(e));
  }
  return out;
}

std::string StatementTemplates::expression(
    const std::string& kind, const std::map<std::string, std::string>& slots) const {
  return instantiate(kind, slots).text();
}

std::vector<ConcreteStatement> build_import_statements(
    std::vector<LibraryInfo> libraries, const StatementTemplates& templates) {
  std::stable_sort(libraries.begin(), libraries.end(),
                   [](const auto& a, const auto& b) {
                     return a.official_name < b.official_name;
                   });
  std::vector<ConcreteStatement> out;
  for (const auto& lib : libraries) {
    if (lib.alias) {
      auto c = templates.instantiate(
          kg::kImportStatement, {{"official_name", lib.official_name}, {"alias", *lib.alias}},
          kg::kLibraryHasAlias);
      c.form = ImportAliased{lib.official_name, *lib.alias};
      out.push_back(std::move(c));
    } else {
      auto c = templates.instantiate(kg::kImportStatement,
                                     {{"official_name", lib.official_name}},
                                     kg::kLibraryWithoutAlias);
      c.form = ImportPlain{lib.official_name};
      out.push_back(std::move(c));
    }
  }
  return out;
}

PlrProgram render(const PlaProgram& pla, const LanguageInfo& language,
                  const KbView& kb, QuadStore& store) {
  return Renderer(pla, language, kb, store).run();
}

PlrProgram read_plr(const QuadStore& store, const std::string& graph) {
  PlrProgram plr;
  plr.graph = graph;
  KbView view(store, graph);
  const auto g = graph_term(graph);
  for (const auto& row :
       store.match({var("p"), iri(plr::kLanguage), var("lang"), g}))
    plr.language = row.at("lang").text();

  struct Entry {
    std::int64_t section_index;
    std::int64_t order;
    std::string section;
    ConcreteStatement statement;
  };
  std::vector<Entry> entries;
  for (const auto& s : view.subjects(rdf::kType, iri(plr::kStatement))) {
    Entry e;
    e.section_index = view.integer_of(s, plr::kSectionEmissionIndex).value_or(0);
    e.order = view.integer_of(s, plr::kOrderIndex).value_or(0);
    e.section = view.string_of(s, plr::kSection).value_or("");
    auto& st = e.statement;
    st.variation = view.string_of(s, plr::kVariation).value_or("");
    const auto form = view.string_of(s, plr::kStatementForm).value_or("");
    auto str = [&](const std::string& p) { return view.string_of(s, p).value_or(""); };
    if (form == "ImportPlain") {
      st.form = ImportPlain{str(plr::kOfficialName)};
    } else if (form == "ImportAliased") {
      st.form = ImportAliased{str(plr::kOfficialName), str(plr::kAlias)};
    } else if (form == "AssignExpr") {
      st.form = AssignExpr{str(plr::kLhs), str(plr::kRhs)};
    } else {
      std::vector<std::pair<std::int64_t, std::string>> args;
      for (const auto& a : view.objects(s, plr::kHasArgument))
        args.emplace_back(view.integer_of(a.text(), plr::kArgumentIndex).value_or(0),
                          view.string_of(a.text(), plr::kArgumentText).value_or(""));
      std::sort(args.begin(), args.end());
      CallStmt call{str(plr::kCallee), {}};
      for (auto& [i, text] : args) call.arguments.push_back(std::move(text));
      st.form = std::move(call);
    }
    std::vector<std::pair<std::int64_t, Element>> elements;
    for (const auto& el : view.objects(s, plr::kHasElement)) {
      const auto& n = el.text();
      elements.emplace_back(view.integer_of(n, plr::kElementOrder).value_or(0),
                            Element{view.string_of(n, kg::kElementKind).value_or(""),
                                    view.string_of(n, plr::kElementText).value_or(""),
                                    view.string_of(n, plr::kSeparatorBefore).value_or("")});
    }
    std::sort(elements.begin(), elements.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [order, element] : elements) st.elements.push_back(std::move(element));
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.section_index, a.order) < std::tie(b.section_index, b.order);
  });
  for (auto& e : entries) {
    if (plr.sections.empty() || plr.sections.back().emission_index != e.section_index)
      plr.sections.push_back({e.section, e.section_index, {}});
    plr.sections.back().statements.push_back(std::move(e.statement));
  }
  return plr;
}

std::string emit(const PlrProgram& plr, bool blank_lines) {
  std::string out;
  bool first = true;
  for (const auto& section : plr.sections) {
    if (section.statements.empty()) continue;
    if (blank_lines && !first) out += "\n";
    first = false;
    for (const auto& st : section.statements) out += st.text() + "\n";
  }
  return out;
}

std::filesystem::path write_source(const std::string& text, const std::string& basename,
                                   const LanguageInfo& language,
                                   const std::filesystem::path& out_dir, bool force) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(out_dir, ec))
    throw WriteError("output directory '" + out_dir.string() + "' does not exist");
  const fs::path path = out_dir / (basename + language.source_file_extension);
  if (!force && fs::exists(path, ec))
    throw WriteError("'" + path.string() + "' exists (use --force to replace it)");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw WriteError("failed writing '" + path.string() + "'");
  return path;
}

}  // namespace kgsynth

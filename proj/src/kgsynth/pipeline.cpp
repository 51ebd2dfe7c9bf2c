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

#include "kgsynth/pipeline.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "kgsynth/error.hpp"
#include "kgsynth/ontology_io.hpp"
#include "kgsynth/vocab.hpp"

namespace kgsynth {
namespace fs = std::filesystem;
namespace {

// Runs `fn`, rethrowing any failure as a PipelineError of `stage`.
template <typename Fn>
auto in_stage(Stage stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(stage, e.what());
  }
}

std::string read_file(const fs::path& path, Stage stage) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PipelineError(stage, "cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  return out + "'";
}

struct Command {
  int status = -1;
  std::string output;
};

Command run_command(const std::string& command) {
  Command result;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string local_name(const std::string& iri) {
  const auto pos = iri.find_last_of("#/");
  return pos == std::string::npos ? iri : iri.substr(pos + 1);
}

}  // namespace

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kConfig: return "config";
    case Stage::kLoad: return "kb-load";
    case Stage::kParse: return "parse";
    case Stage::kResolve: return "resolve";
    case Stage::kCompose: return "compose";
    case Stage::kRender: return "render";
    case Stage::kWrite: return "write";
    case Stage::kQuery: return "query";
    case Stage::kInternal: return "internal";
  }
  return "internal";
}

Session::Session(const fs::path& kb_dir, fs::path catalog) {
  if (kb_dir.empty())
    throw PipelineError(Stage::kConfig, "no knowledge base directory given");
  if (catalog.empty()) catalog = kb_dir / "catalog.tsv";
  load_ = in_stage(Stage::kLoad,
                   [&] { return load_knowledge_base(kb_dir, catalog, store_); });
  if (!load_.problems.empty()) {
    std::string message = "knowledge base is inconsistent:";
    for (const auto& p : load_.problems) message += "\n  " + p;
    throw PipelineError(Stage::kLoad, message);
  }
}

SynthesisResult Session::synthesize(const fs::path& statement,
                                    const SynthesisOptions& options) {
  if (!fs::is_regular_file(statement))
    throw PipelineError(Stage::kConfig,
                        "problem statement not found: " + statement.string());
  auto result =
      synthesize_text(read_file(statement, Stage::kConfig), statement.string(), options);
  result.statement_dir = statement.parent_path();
  return result;
}

SynthesisResult Session::synthesize_text(std::string_view text, std::string_view source,
                                         const SynthesisOptions& options) {
  SynthesisResult r;
  r.statement_source = std::string(source);
  r.statement = in_stage(Stage::kParse, [&] { return parse_problem_statement(text, source); });
  const KbView view(store_);
  r.plan = in_stage(Stage::kResolve, [&] { return resolve(r.statement, view); });
  r.pla = in_stage(Stage::kCompose, [&] { return compose(r.plan, view, store_); });
  r.pla_quads = store_.graph_size(r.pla.graph);
  in_stage(Stage::kRender, [&] {
    auto rendered = render(r.pla, r.plan.language, view, store_);
    r.plr = read_plr(store_, rendered.graph);
    r.source = emit(r.plr, options.blank_lines);
    return 0;
  });
  r.plr_quads = store_.graph_size(r.plr.graph);
  if (options.write) {
    r.output = in_stage(Stage::kWrite, [&] {
      return write_source(r.source, r.plan.program_basename, r.plan.language,
                          options.out_dir, options.force);
    });
  }
  return r;
}

std::string SynthesisResult::summary() const {
  std::ostringstream out;
  out << "statement: " << statement_source << "\n";
  out << "data source: " << plan.data_source.name << " <" << plan.data_source.iri
      << ">\n";
  out << "reader: " << plan.reader_function.library.official_name << "."
      << plan.reader_function.callable_name << "\n";
  for (const auto& c : plan.calculations)
    out << "calculation: '" << c.label << "' -> " << c.algorithm.name << " ("
        << c.function.library.official_name << "." << c.function.callable_name << ")\n";
  out << "structure: " << plan.structure.name << "\n";
  out << "language: " << plan.language.tag << " (" << plan.language.source_file_extension
      << ")\n";
  out << "PLA version: " << pla_quads << " quads in <" << pla.graph << ">\n";
  out << "PLR version: " << plr_quads << " quads in <" << plr.graph << ">\n";
  out << "statements: " << plr.statement_count() << "\n";
  if (!output.empty()) out << "output: " << output.string() << "\n";
  return out.str();
}

KbStats Session::stats() const {
  KbStats s;
  s.files = load_.report.files;
  for (const auto& g : store_.graph_names()) s.quads_per_graph[g] = store_.graph_size(g);
  const KbView view(store_);
  for (const auto& pillar : {kg::kDataPillar, kg::kAlgorithmsPillar, kg::kCodePillar,
                             kg::kGeneralPillar}) {
    std::set<std::string> classes;
    std::vector<std::string> work = view.subjects(kg::kInPillar, iri(pillar));
    while (!work.empty()) {
      auto c = work.back();
      work.pop_back();
      if (!classes.insert(c).second) continue;
      for (auto& sub : view.subjects(rdfs::kSubClassOf, iri(c))) work.push_back(sub);
    }
    std::set<std::string> entities;
    for (const auto& c : classes)
      for (auto& e : view.subjects(rdf::kType, iri(c))) entities.insert(e);
    s.pillars.push_back({local_name(pillar), classes.size(), entities.size()});
  }
  return s;
}

std::string KbStats::report() const {
  std::ostringstream out;
  out << "files loaded: " << files << "\n";
  std::size_t total = 0;
  for (const auto& [graph, n] : quads_per_graph) {
    out << "graph <" << graph << ">: " << n << " quads\n";
    total += n;
  }
  out << "total quads: " << total << "\n";
  for (const auto& p : pillars)
    out << "pillar " << p.pillar << ": " << p.classes << " classes, " << p.entities
        << " entities\n";
  return out.str();
}

std::string Session::dump_graph(std::string_view graph) const {
  return serialize(store_, graph);
}

QueryResult Session::query(std::string_view text) const {
  QueryResult r;
  const auto patterns =
      in_stage(Stage::kQuery, [&] { return parse_patterns(text, kCoreGraph); });
  if (patterns.empty()) throw PipelineError(Stage::kQuery, "no patterns given");
  for (const auto& p : patterns)
    for (const auto& v : p.variables())
      if (std::find(r.variables.begin(), r.variables.end(), v) == r.variables.end())
        r.variables.push_back(v);
  r.rows = store_.query(std::span<const Pattern>(patterns));
  return r;
}

std::string QueryResult::table() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < variables.size(); ++i)
    out << (i ? "\t" : "") << "?" << variables[i];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < variables.size(); ++i)
      out << (i ? "\t" : "") << row.at(variables[i]).to_string();
    out << "\n";
  }
  out << "(" << rows.size() << (rows.size() == 1 ? " row" : " rows") << ")\n";
  return out.str();
}

bool python_with_numpy_available() {
  return run_command("python3 -c 'import sys, numpy; sys.exit(sys.version_info < (3, 8))'")
             .status == 0;
}

std::map<std::string, double> parse_report_lines(std::string_view output) {
  std::map<std::string, double> values;
  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto label = line.substr(0, eq);
    while (!label.empty() && label.back() == ' ') label.pop_back();
    const auto value = line.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str()) continue;
    values[label] = v;
  }
  return values;
}

ExecCheckResult exec_check(const SynthesisResult& result) {
  ExecCheckResult r;
  if (!python_with_numpy_available()) {
    r.skipped_reason = "python3 >= 3.8 with numpy not available";
    return r;
  }
  std::string templ = (fs::temp_directory_path() / "kgsynth-exec-XXXXXX").string();
  if (!mkdtemp(templ.data())) {
    r.skipped_reason = "cannot create a scratch directory";
    return r;
  }
  const fs::path dir = templ;
  const auto& ds = result.plan.data_source;
  const fs::path data = result.statement_dir / ds.location;
  std::error_code ec;
  fs::copy_file(data, dir / ds.location, ec);
  if (ec) {
    r.skipped_reason = "data file '" + data.string() + "' not found";
    fs::remove_all(dir, ec);
    return r;
  }
  const auto program =
      dir / (result.plan.program_basename + result.plan.language.source_file_extension);
  std::ofstream(program, std::ios::binary) << result.source;
  const auto cmd = run_command("cd " + shell_quote(dir.string()) + " && python3 " +
                               shell_quote(program.filename().string()));
  r.ran = true;
  r.exit_status = cmd.status;
  r.output = cmd.output;
  r.values = parse_report_lines(cmd.output);
  fs::remove_all(dir, ec);
  return r;
}

}  // namespace kgsynth

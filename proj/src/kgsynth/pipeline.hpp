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

// End-to-end driver: statement in, source file out. Failures are reported
// as PipelineError tagged with the stage that raised them.

#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kgsynth/composer.hpp"
#include "kgsynth/kb_views.hpp"
#include "kgsynth/problem_statement.hpp"
#include "kgsynth/quad_store.hpp"
#include "kgsynth/renderer.hpp"
#include "kgsynth/resolver.hpp"

namespace kgsynth {

// Values are the process exit codes.
enum class Stage {
  kConfig = 2,
  kLoad = 3,
  kParse = 4,
  kResolve = 5,
  kCompose = 6,
  kRender = 7,
  kWrite = 8,
  kQuery = 9,
  kInternal = 1,
};

std::string_view stage_name(Stage stage);
inline int exit_code(Stage stage) { return static_cast<int>(stage); }

class PipelineError : public std::runtime_error {
 public:
  PipelineError(Stage stage, const std::string& message)
      : std::runtime_error(message), stage_(stage) {}
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

struct SynthesisOptions {
  std::filesystem::path out_dir = ".";
  bool blank_lines = false;
  bool force = false;
  bool write = true;  // false: stop after emitting the text
};

struct SynthesisResult {
  std::string statement_source;
  std::filesystem::path statement_dir;
  ProblemStatement statement;
  BuildPlan plan;
  PlaProgram pla;
  PlrProgram plr;
  std::size_t pla_quads = 0;
  std::size_t plr_quads = 0;
  std::string source;
  std::filesystem::path output;  // empty when not written

  // Chosen entities, graph sizes and output path; no timings.
  std::string summary() const;
};

struct PillarCount {
  std::string pillar;
  std::size_t classes = 0;
  std::size_t entities = 0;
};

struct KbStats {
  std::size_t files = 0;
  std::map<std::string, std::size_t> quads_per_graph;
  std::vector<PillarCount> pillars;

  std::string report() const;
};

struct QueryResult {
  std::vector<std::string> variables;  // first-appearance order
  std::vector<Bindings> rows;

  // Tab-separated, header of ?names, terms in N-Triples form.
  std::string table() const;
};

class Session {
 public:
  // An empty catalog path means kb_dir/catalog.tsv.
  Session(const std::filesystem::path& kb_dir, std::filesystem::path catalog = {});

  const QuadStore& store() const { return store_; }
  KbView kb() const { return KbView(store_); }
  const KbLoadResult& load_result() const { return load_; }

  SynthesisResult synthesize(const std::filesystem::path& statement,
                             const SynthesisOptions& options = {});
  SynthesisResult synthesize_text(std::string_view text, std::string_view source,
                                  const SynthesisOptions& options = {});

  KbStats stats() const;
  std::string dump_graph(std::string_view graph) const;
  QueryResult query(std::string_view patterns) const;

 private:
  QuadStore store_;
  KbLoadResult load_;
};

struct ExecCheckResult {
  bool ran = false;
  std::string skipped_reason;
  int exit_status = -1;
  std::string output;
  std::map<std::string, double> values;  // from "label = value" lines
};

// True when `python3` runs and imports numpy.
bool python_with_numpy_available();

// Runs the emitted program in a scratch directory holding a copy of the
// data file (found next to the statement). Never throws for a failing
// program; the exit status and output are returned.
ExecCheckResult exec_check(const SynthesisResult& result);

// Parses "label = value" lines as printed by the report statements.
std::map<std::string, double> parse_report_lines(std::string_view output);

}  // namespace kgsynth

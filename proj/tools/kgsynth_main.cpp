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

// kgsynth command-line driver.
//
//   kgsynth [--kb DIR] [--catalog FILE] synthesize STATEMENT
//           [--out DIR] [--style blank-lines] [--exec-check] [--force]
//   kgsynth [--kb DIR] kb-stats [--statement FILE]
//   kgsynth [--kb DIR] dump-graph IRI [--statement FILE]
//   kgsynth [--kb DIR] query PATTERNS [--statement FILE]
//
// The inspection commands see only the knowledge base unless --statement
// names a problem statement to synthesize in memory first.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kgsynth/kgsynth.h"

#ifndef KGSYNTH_DEFAULT_KB_DIR
#define KGSYNTH_DEFAULT_KB_DIR "kb"
#endif

namespace {

int report(kgs_status status) {
  std::cerr << "error [" << kgs_status_stage(status) << "]: " << kgs_last_error()
            << "\n";
  return static_cast<int>(status);
}

struct Session {
  kgs_session* handle = nullptr;
  ~Session() { kgs_session_close(handle); }
};

struct Synthesis {
  kgs_synthesis* handle = nullptr;
  ~Synthesis() { kgs_synthesis_free(handle); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  kgs_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Synthesize analytic programs from a knowledge graph."};
  app.require_subcommand(1);

  std::string kb_dir;
  if (const char* env = std::getenv("KGSYNTH_KB")) kb_dir = env;
  if (kb_dir.empty()) kb_dir = KGSYNTH_DEFAULT_KB_DIR;
  std::string catalog;
  app.add_option("--kb", kb_dir, "knowledge base directory (env KGSYNTH_KB)");
  app.add_option("--catalog", catalog, "import catalog (default: KB/catalog.tsv)");

  std::string statement, out_dir = ".", style = "compact";
  bool exec_check = false, force = false;
  auto* synth = app.add_subcommand("synthesize", "write the program for a problem statement");
  synth->add_option("STATEMENT", statement, "problem statement file")->required();
  synth->add_option("--out", out_dir, "output directory");
  synth->add_option("--style", style, "layout style")
      ->check(CLI::IsMember({"compact", "blank-lines"}));
  synth->add_flag("--exec-check", exec_check, "run the emitted program with python3");
  synth->add_flag("--force", force, "replace an existing output file");

  std::string inspect_statement;
  auto* stats = app.add_subcommand("kb-stats", "report knowledge base size");
  stats->add_option("--statement", inspect_statement, "synthesize in memory first");

  std::string graph;
  auto* dump = app.add_subcommand("dump-graph", "print one named graph as Turtle");
  dump->add_option("IRI", graph, "graph IRI")->required();
  dump->add_option("--statement", inspect_statement, "synthesize in memory first");

  std::string patterns;
  auto* query = app.add_subcommand("query", "match graph patterns");
  query->add_option("PATTERNS", patterns, "patterns, '.'-separated")->required();
  query->add_option("--statement", inspect_statement, "synthesize in memory first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error [config]: " << e.what() << "\n";
    return KGS_ERR_CONFIG;
  }

  const auto start = std::chrono::steady_clock::now();
  Session session;
  if (kgs_status st = kgs_session_open(kb_dir.c_str(),
                                       catalog.empty() ? nullptr : catalog.c_str(),
                                       &session.handle);
      st != KGS_OK)
    return report(st);

  kgs_synthesis_options options;
  kgs_synthesis_options_init(&options);

  if (*synth) {
    options.out_dir = out_dir.c_str();
    options.blank_lines = style == "blank-lines";
    options.force = force;
    Synthesis result;
    if (kgs_status st =
            kgs_synthesize(session.handle, statement.c_str(), &options, &result.handle);
        st != KGS_OK)
      return report(st);
    std::cout << kgs_synthesis_summary(result.handle);
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::fprintf(stderr, "time: %.1f ms\n", ms);
    if (exec_check) {
      int ran = 0, status = -1;
      char* output = nullptr;
      if (kgs_status st = kgs_exec_check(result.handle, &ran, &status, &output);
          st != KGS_OK)
        return report(st);
      const std::string text = take(output);
      if (!ran) {
        std::cout << "exec-check: skipped (" << text << ")\n";
        return 0;
      }
      std::cout << "exec-check: exit status " << status << "\n" << text;
      if (status != 0) {
        std::cerr << "error [exec-check]: emitted program exited with status " << status
                  << "\n";
        return KGS_ERR_INTERNAL;
      }
    }
    return 0;
  }

  if (!inspect_statement.empty()) {
    options.write = 0;
    Synthesis result;
    if (kgs_status st = kgs_synthesize(session.handle, inspect_statement.c_str(),
                                       &options, &result.handle);
        st != KGS_OK)
      return report(st);
  }

  if (*stats) {
    char* text = nullptr;
    if (kgs_status st = kgs_kb_stats(session.handle, &text); st != KGS_OK)
      return report(st);
    std::cout << take(text);
  } else if (*dump) {
    char* text = nullptr;
    if (kgs_status st = kgs_dump_graph(session.handle, graph.c_str(), &text);
        st != KGS_OK)
      return report(st);
    std::cout << take(text);
  } else if (*query) {
    kgs_table* table = nullptr;
    if (kgs_status st = kgs_query(session.handle, patterns.c_str(), &table);
        st != KGS_OK)
      return report(st);
    std::cout << kgs_table_text(table);
    kgs_table_free(table);
  }
  return 0;
}

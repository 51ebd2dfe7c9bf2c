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

#include "kgsynth/kgsynth.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "kgsynth/pipeline.hpp"

struct kgs_session {
  std::unique_ptr<kgsynth::Session> impl;
};

struct kgs_synthesis {
  kgsynth::SynthesisResult result;
  std::string summary;
  std::string output_path;
};

struct kgs_table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;
  std::string text;
};

namespace {

thread_local std::string last_error;

kgs_status fail(kgs_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `fn` and converts any escaping exception into a status.
template <typename Fn>
kgs_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const kgsynth::PipelineError& e) {
    return fail(static_cast<kgs_status>(kgsynth::exit_code(e.stage())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KGS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KGS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KGS_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kgsynth::SynthesisOptions to_options(const kgs_synthesis_options* o) {
  kgsynth::SynthesisOptions options;
  if (!o) return options;
  if (o->out_dir) options.out_dir = o->out_dir;
  options.blank_lines = o->blank_lines != 0;
  options.force = o->force != 0;
  options.write = o->write != 0;
  return options;
}

kgs_synthesis* wrap(kgsynth::SynthesisResult result) {
  auto* s = new kgs_synthesis{std::move(result), {}, {}};
  s->summary = s->result.summary();
  s->output_path = s->result.output.string();
  return s;
}

}  // namespace

extern "C" {

const char* kgs_version(void) { return "0.1.0"; }

const char* kgs_last_error(void) { return last_error.c_str(); }

const char* kgs_status_stage(kgs_status status) {
  if (status == KGS_OK) return "ok";
  return kgsynth::stage_name(static_cast<kgsynth::Stage>(status)).data();
}

void kgs_free(void* p) { std::free(p); }

void kgs_synthesis_options_init(kgs_synthesis_options* options) {
  if (!options) return;
  options->out_dir = nullptr;
  options->blank_lines = 0;
  options->force = 0;
  options->write = 1;
}

kgs_status kgs_session_open(const char* kb_dir, const char* catalog, kgs_session** out) {
  if (!out) return fail(KGS_ERR_CONFIG, "null output handle");
  *out = nullptr;
  if (!kb_dir) return fail(KGS_ERR_CONFIG, "no knowledge base directory given");
  return guarded([&] {
    auto impl = std::make_unique<kgsynth::Session>(
        kb_dir, catalog ? std::filesystem::path(catalog) : std::filesystem::path());
    *out = new kgs_session{std::move(impl)};
    return KGS_OK;
  });
}

void kgs_session_close(kgs_session* session) { delete session; }

kgs_status kgs_synthesize(kgs_session* session, const char* statement_path,
                          const kgs_synthesis_options* options, kgs_synthesis** out) {
  if (!out) return fail(KGS_ERR_CONFIG, "null output handle");
  *out = nullptr;
  if (!session || !statement_path)
    return fail(KGS_ERR_CONFIG, "session and statement path are required");
  return guarded([&] {
    *out = wrap(session->impl->synthesize(statement_path, to_options(options)));
    return KGS_OK;
  });
}

kgs_status kgs_synthesize_text(kgs_session* session, const char* text,
                               const char* source_name,
                               const kgs_synthesis_options* options,
                               kgs_synthesis** out) {
  if (!out) return fail(KGS_ERR_CONFIG, "null output handle");
  *out = nullptr;
  if (!session || !text) return fail(KGS_ERR_CONFIG, "session and text are required");
  return guarded([&] {
    *out = wrap(session->impl->synthesize_text(text, source_name ? source_name : "",
                                               to_options(options)));
    return KGS_OK;
  });
}

void kgs_synthesis_free(kgs_synthesis* synthesis) { delete synthesis; }

const char* kgs_synthesis_source(const kgs_synthesis* s) {
  return s ? s->result.source.c_str() : "";
}

const char* kgs_synthesis_summary(const kgs_synthesis* s) {
  return s ? s->summary.c_str() : "";
}

const char* kgs_synthesis_output_path(const kgs_synthesis* s) {
  return s ? s->output_path.c_str() : "";
}

const char* kgs_synthesis_pla_graph(const kgs_synthesis* s) {
  return s ? s->result.pla.graph.c_str() : "";
}

const char* kgs_synthesis_plr_graph(const kgs_synthesis* s) {
  return s ? s->result.plr.graph.c_str() : "";
}

size_t kgs_synthesis_pla_quads(const kgs_synthesis* s) {
  return s ? s->result.pla_quads : 0;
}

size_t kgs_synthesis_plr_quads(const kgs_synthesis* s) {
  return s ? s->result.plr_quads : 0;
}

kgs_status kgs_exec_check(const kgs_synthesis* s, int* ran, int* exit_status,
                          char** output) {
  if (!s || !ran || !exit_status || !output)
    return fail(KGS_ERR_CONFIG, "null argument");
  *output = nullptr;
  return guarded([&] {
    auto r = kgsynth::exec_check(s->result);
    *ran = r.ran ? 1 : 0;
    *exit_status = r.exit_status;
    *output = duplicate(r.ran ? r.output : r.skipped_reason);
    return KGS_OK;
  });
}

kgs_status kgs_kb_stats(const kgs_session* session, char** report) {
  if (!session || !report) return fail(KGS_ERR_CONFIG, "null argument");
  *report = nullptr;
  return guarded([&] {
    *report = duplicate(session->impl->stats().report());
    return KGS_OK;
  });
}

kgs_status kgs_dump_graph(const kgs_session* session, const char* graph, char** text) {
  if (!session || !graph || !text) return fail(KGS_ERR_CONFIG, "null argument");
  *text = nullptr;
  return guarded([&] {
    *text = duplicate(session->impl->dump_graph(graph));
    return KGS_OK;
  });
}

kgs_status kgs_query(const kgs_session* session, const char* patterns, kgs_table** out) {
  if (!out) return fail(KGS_ERR_CONFIG, "null output handle");
  *out = nullptr;
  if (!session || !patterns) return fail(KGS_ERR_CONFIG, "null argument");
  return guarded([&] {
    auto result = session->impl->query(patterns);
    auto table = std::make_unique<kgs_table>();
    table->columns = result.variables;
    for (const auto& row : result.rows) {
      std::vector<std::string> cells;
      for (const auto& v : result.variables) cells.push_back(row.at(v).to_string());
      table->cells.push_back(std::move(cells));
    }
    table->text = result.table();
    *out = table.release();
    return KGS_OK;
  });
}

void kgs_table_free(kgs_table* table) { delete table; }

size_t kgs_table_columns(const kgs_table* t) { return t ? t->columns.size() : 0; }

size_t kgs_table_rows(const kgs_table* t) { return t ? t->cells.size() : 0; }

const char* kgs_table_column_name(const kgs_table* t, size_t column) {
  if (!t || column >= t->columns.size()) return nullptr;
  return t->columns[column].c_str();
}

const char* kgs_table_cell(const kgs_table* t, size_t row, size_t column) {
  if (!t || row >= t->cells.size() || column >= t->columns.size()) return nullptr;
  return t->cells[row][column].c_str();
}

const char* kgs_table_text(const kgs_table* t) { return t ? t->text.c_str() : ""; }

}  // extern "C"

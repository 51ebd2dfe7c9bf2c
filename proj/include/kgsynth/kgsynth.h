/* Copyright 2026 The kgsynth Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to kgsynth.
 *
 * A session owns a loaded knowledge base. Synthesis results and query
 * tables are separate objects that stay valid after further calls on the
 * session. Strings returned as `const char*` are owned by the object they
 * came from; strings returned through `char**` must be released with
 * kgs_free. No function throws; on failure the status names the stage and
 * kgs_last_error() holds the message for the calling thread.
 */

#ifndef KGSYNTH_KGSYNTH_H_
#define KGSYNTH_KGSYNTH_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(KGSYNTH_BUILDING)
#define KGS_API __declspec(dllexport)
#else
#define KGS_API __declspec(dllimport)
#endif
#else
#define KGS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status values double as process exit codes. */
typedef enum kgs_status {
  KGS_OK = 0,
  KGS_ERR_INTERNAL = 1,
  KGS_ERR_CONFIG = 2,
  KGS_ERR_KB_LOAD = 3,
  KGS_ERR_PARSE = 4,
  KGS_ERR_RESOLVE = 5,
  KGS_ERR_COMPOSE = 6,
  KGS_ERR_RENDER = 7,
  KGS_ERR_WRITE = 8,
  KGS_ERR_QUERY = 9
} kgs_status;

typedef struct kgs_session kgs_session;
typedef struct kgs_synthesis kgs_synthesis;
typedef struct kgs_table kgs_table;

typedef struct kgs_synthesis_options {
  const char* out_dir; /* NULL: current directory */
  int blank_lines;     /* empty line between program sections */
  int force;           /* replace an existing output file */
  int write;           /* 0: build and emit only */
} kgs_synthesis_options;

KGS_API const char* kgs_version(void);

/* Message of the last failed call on this thread; "" when none. */
KGS_API const char* kgs_last_error(void);
/* Stage name for a status: "config", "kb-load", "parse", ... */
KGS_API const char* kgs_status_stage(kgs_status status);
KGS_API void kgs_free(void* p);

KGS_API void kgs_synthesis_options_init(kgs_synthesis_options* options);

/* `catalog` may be NULL for kb_dir/catalog.tsv. */
KGS_API kgs_status kgs_session_open(const char* kb_dir, const char* catalog,
                                    kgs_session** out);
KGS_API void kgs_session_close(kgs_session* session);

KGS_API kgs_status kgs_synthesize(kgs_session* session, const char* statement_path,
                                  const kgs_synthesis_options* options,
                                  kgs_synthesis** out);
KGS_API kgs_status kgs_synthesize_text(kgs_session* session, const char* text,
                                       const char* source_name,
                                       const kgs_synthesis_options* options,
                                       kgs_synthesis** out);
KGS_API void kgs_synthesis_free(kgs_synthesis* synthesis);

KGS_API const char* kgs_synthesis_source(const kgs_synthesis* synthesis);
KGS_API const char* kgs_synthesis_summary(const kgs_synthesis* synthesis);
/* "" when the file was not written. */
KGS_API const char* kgs_synthesis_output_path(const kgs_synthesis* synthesis);
KGS_API const char* kgs_synthesis_pla_graph(const kgs_synthesis* synthesis);
KGS_API const char* kgs_synthesis_plr_graph(const kgs_synthesis* synthesis);
KGS_API size_t kgs_synthesis_pla_quads(const kgs_synthesis* synthesis);
KGS_API size_t kgs_synthesis_plr_quads(const kgs_synthesis* synthesis);

/* Runs the emitted program with python3 next to a copy of its data file.
 * `ran` is 0 when no suitable interpreter exists; `output` then holds the
 * reason. */
KGS_API kgs_status kgs_exec_check(const kgs_synthesis* synthesis, int* ran,
                                  int* exit_status, char** output);

KGS_API kgs_status kgs_kb_stats(const kgs_session* session, char** report);
KGS_API kgs_status kgs_dump_graph(const kgs_session* session, const char* graph,
                                  char** text);

KGS_API kgs_status kgs_query(const kgs_session* session, const char* patterns,
                             kgs_table** out);
KGS_API void kgs_table_free(kgs_table* table);
KGS_API size_t kgs_table_columns(const kgs_table* table);
KGS_API size_t kgs_table_rows(const kgs_table* table);
KGS_API const char* kgs_table_column_name(const kgs_table* table, size_t column);
/* N-Triples form of a bound term. */
KGS_API const char* kgs_table_cell(const kgs_table* table, size_t row, size_t column);
KGS_API const char* kgs_table_text(const kgs_table* table);

#ifdef __cplusplus
}
#endif

#endif /* KGSYNTH_KGSYNTH_H_ */

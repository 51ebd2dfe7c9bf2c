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

// Links only the shared library, as an outside caller would.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kgsynth/kgsynth.h"

namespace {

const std::filesystem::path kSource = KGSYNTH_SOURCE_DIR;

std::string statement_text() {
  std::ifstream in(kSource / "tests/data/hello_analytic.kgs");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CApi : public ::testing::Test {
 protected:
  void SetUp() override {
    ASSERT_EQ(kgs_session_open((kSource / "kb").c_str(), nullptr, &session_), KGS_OK)
        << kgs_last_error();
  }
  void TearDown() override { kgs_session_close(session_); }

  kgs_session* session_ = nullptr;
};

TEST_F(CApi, SynthesizeInMemory) {
  kgs_synthesis_options o;
  kgs_synthesis_options_init(&o);
  o.write = 0;
  kgs_synthesis* s = nullptr;
  ASSERT_EQ(kgs_synthesize(session_, (kSource / "tests/data/hello_analytic.kgs").c_str(),
                           &o, &s),
            KGS_OK)
      << kgs_last_error();
  EXPECT_EQ(std::string(kgs_synthesis_source(s)).rfind("import numpy as np\n", 0), 0u);
  EXPECT_STREQ(kgs_synthesis_output_path(s), "");
  EXPECT_GT(kgs_synthesis_pla_quads(s), 0u);
  EXPECT_GT(kgs_synthesis_plr_quads(s), 0u);
  EXPECT_STREQ(kgs_synthesis_pla_graph(s),
               "https://kgsynth.dev/program/hello_analytic-pla");
  kgs_synthesis_free(s);
}

TEST_F(CApi, StatusesAndMessages) {
  kgs_synthesis_options o;
  kgs_synthesis_options_init(&o);
  o.write = 0;
  kgs_synthesis* s = nullptr;
  std::string text = statement_text();
  text.replace(text.find("Python-3.8"), 10, "Ada-2012");
  EXPECT_EQ(kgs_synthesize_text(session_, text.c_str(), "t.kgs", &o, &s), KGS_ERR_RESOLVE);
  EXPECT_EQ(s, nullptr);
  EXPECT_NE(std::string(kgs_last_error()).find("Ada-2012"), std::string::npos);
  EXPECT_STREQ(kgs_status_stage(KGS_ERR_RESOLVE), "resolve");
  EXPECT_EQ(kgs_synthesize_text(session_, "nonsense", "t.kgs", &o, &s), KGS_ERR_PARSE);
  EXPECT_EQ(kgs_synthesize(session_, nullptr, &o, &s), KGS_ERR_CONFIG);

  kgs_session* bad = nullptr;
  EXPECT_EQ(kgs_session_open("/nonexistent-kb", nullptr, &bad), KGS_ERR_KB_LOAD);
  EXPECT_EQ(bad, nullptr);
}

TEST_F(CApi, QueryTable) {
  kgs_table* t = nullptr;
  ASSERT_EQ(kgs_query(session_, "?l a kg:Library . ?l kg:officialName ?n", &t), KGS_OK);
  ASSERT_EQ(kgs_table_columns(t), 2u);
  EXPECT_STREQ(kgs_table_column_name(t, 1), "n");
  ASSERT_EQ(kgs_table_rows(t), 2u);
  EXPECT_STREQ(kgs_table_cell(t, 0, 1), "\"numpy\"");
  EXPECT_STREQ(kgs_table_cell(t, 1, 1), "\"sys\"");
  EXPECT_EQ(kgs_table_cell(t, 2, 0), nullptr);
  EXPECT_EQ(kgs_table_column_name(t, 2), nullptr);
  kgs_table_free(t);
  EXPECT_EQ(kgs_query(session_, "?x", &t), KGS_ERR_QUERY);
}

TEST_F(CApi, StatsAndDump) {
  char* text = nullptr;
  ASSERT_EQ(kgs_kb_stats(session_, &text), KGS_OK);
  EXPECT_NE(std::string(text).find("files loaded: 20\n"), std::string::npos) << text;
  kgs_free(text);
  ASSERT_EQ(kgs_dump_graph(session_, "https://kgsynth.dev/graph/core", &text), KGS_OK);
  EXPECT_NE(std::string(text).find("kb:arithmetic_mean"), std::string::npos);
  kgs_free(text);
}

}  // namespace

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

#include <gtest/gtest.h>

#include "kgsynth/renderer.hpp"
#include "test_support.hpp"

namespace kgsynth {
namespace {

struct Fixture {
  QuadStore store = testing::shipped_kb();
  KbView kb{store};
  BuildPlan plan = resolve(
      parse_problem_statement(testing::read_text(testing::exemplar_statement())), kb);

  PlrProgram run() {
    auto pla = compose(plan, kb, store);
    return render(pla, plan.language, kb, store);
  }
};

TEST(Renderer, ExemplarMatchesGolden) {
  Fixture f;
  EXPECT_EQ(emit(f.run()), testing::kExemplarProgram);
}

TEST(Renderer, BlankLinesBetweenSections) {
  Fixture f;
  EXPECT_EQ(emit(f.run(), true),
            "import numpy as np\n"
            "import sys\n"
            "\n"
            "input_data_filename = 'my_input.txt'\n"
            "input_data = np.loadtxt(input_data_filename)\n"
            "\n"
            "mean = np.mean(input_data)\n"
            "std = np.std(input_data)\n"
            "\n"
            "print('mean = ',mean)\n"
            "print('std = ',std)\n"
            "\n"
            "sys.exit(0)\n");
}

TEST(Renderer, EmptyProgramEmitsNothing) {
  EXPECT_EQ(emit(PlrProgram{}), "");
  PlrProgram empty_sections;
  empty_sections.sections.resize(3);
  EXPECT_EQ(emit(empty_sections, true), "");
}

TEST(Renderer, StringLiteralsAreEscaped) {
  Fixture f;
  f.plan.data_source.name = "it's\\here.txt";
  auto text = emit(f.run());
  EXPECT_NE(text.find("input_data_filename = 'it\\'s\\\\here.txt'\n"), std::string::npos)
      << text;
}

TEST(Renderer, RenderingLeavesAbstractGraphAlone) {
  Fixture f;
  auto pla = compose(f.plan, f.kb, f.store);
  const auto before = f.store.quads(pla.graph);
  const auto core = f.store.graph_size(kCoreGraph);
  auto plr = render(pla, f.plan.language, f.kb, f.store);
  EXPECT_EQ(f.store.quads(pla.graph), before);
  EXPECT_EQ(f.store.graph_size(kCoreGraph), core);
  EXPECT_EQ(plr.graph, plr_graph_iri("hello_analytic"));
  EXPECT_GT(f.store.graph_size(plr.graph), 0u);
}

TEST(Renderer, GraphReadBackEqualsRenderResult) {
  Fixture f;
  auto plr = f.run();
  EXPECT_EQ(read_plr(f.store, plr.graph), plr);
  EXPECT_EQ(plr.statement_count(), 9u);
}

TEST(Renderer, RerenderingReplacesGraph) {
  Fixture f;
  auto first = f.run();
  const auto size = f.store.graph_size(first.graph);
  auto second = f.run();
  EXPECT_EQ(first, second);
  EXPECT_EQ(f.store.graph_size(second.graph), size);
}

TEST(Renderer, UnknownFamilyIsUnsupported) {
  Fixture f;
  LanguageInfo cobol{kb::term("cobol"), "COBOL-85", "COBOL", kb::term("COBOL"), ".cbl", ""};
  try {
    StatementTemplates(f.kb, cobol);
    ADD_FAILURE();
  } catch (const RenderError& e) {
    EXPECT_EQ(e.kind(), RenderError::Kind::kUnsupportedLanguage);
  }
}

LibraryInfo library(const std::string& name, std::optional<std::string> alias = {}) {
  return {kb::term("lib_" + name), name, std::move(alias), LibraryKind::kExternalPackage};
}

std::vector<std::string> texts(const std::vector<ConcreteStatement>& sts) {
  std::vector<std::string> out;
  for (const auto& s : sts) out.push_back(s.text());
  return out;
}

TEST(Imports, SortedByOfficialName) {
  Fixture f;
  StatementTemplates t(f.kb, f.plan.language);
  EXPECT_EQ(texts(build_import_statements(
                {library("zlib"), library("abc"), library("os"), library("numpy", "np")}, t)),
            (std::vector<std::string>{"import abc", "import numpy as np", "import os",
                                      "import zlib"}));
  EXPECT_TRUE(build_import_statements({}, t).empty());
}

TEST(Imports, RandomSetsMatchSortedOracle) {
  Fixture f;
  StatementTemplates t(f.kb, f.plan.language);
  std::mt19937_64 rng(11);
  const std::string chars = "abcXYZ_09";
  for (int round = 0; round < 300; ++round) {
    std::map<std::string, std::optional<std::string>> chosen;
    for (int n = static_cast<int>(rng() % 8); n > 0; --n) {
      std::string name(1, "abcxyz"[rng() % 6]);
      for (int k = static_cast<int>(rng() % 6); k > 0; --k) name += chars[rng() % chars.size()];
      chosen[name] = rng() % 3 == 0 ? std::optional<std::string>("a" + name) : std::nullopt;
    }
    std::vector<LibraryInfo> libs;
    for (const auto& [name, alias] : chosen) libs.push_back(library(name, alias));
    std::shuffle(libs.begin(), libs.end(), rng);
    // std::map iterates in byte order, which is the expected order.
    std::vector<std::string> expected;
    for (const auto& [name, alias] : chosen)
      expected.push_back("import " + name + (alias ? " as " + *alias : ""));
    ASSERT_EQ(texts(build_import_statements(libs, t)), expected) << "round " << round;
  }
}

TEST(WriteSource, CreatesRefusesAndForces) {
  Fixture f;
  testing::TempDir dir;
  auto path = write_source("x = 1\n", "prog", f.plan.language, dir.path());
  EXPECT_EQ(path, dir.path() / "prog.py");
  EXPECT_EQ(testing::read_text(path), "x = 1\n");
  EXPECT_THROW(write_source("x = 2\n", "prog", f.plan.language, dir.path()), WriteError);
  EXPECT_EQ(testing::read_text(path), "x = 1\n");
  write_source("x = 2\n", "prog", f.plan.language, dir.path(), true);
  EXPECT_EQ(testing::read_text(path), "x = 2\n");
  EXPECT_THROW(write_source("", "prog", f.plan.language, dir.path() / "missing"),
               WriteError);
}

}  // namespace
}  // namespace kgsynth

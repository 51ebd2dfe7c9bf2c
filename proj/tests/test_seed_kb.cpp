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

#include "kgsynth/kb_views.hpp"
#include "test_support.hpp"

namespace kgsynth {
namespace {

TEST(SeedKb, LoadsEveryFileAndValidates) {
  QuadStore store;
  auto result = load_knowledge_base(testing::kb_dir(), testing::catalog_path(), store);
  EXPECT_EQ(result.report.files, 20u);
  EXPECT_TRUE(result.problems.empty());
  EXPECT_GT(store.graph_size(kCoreGraph), 0u);
  EXPECT_EQ(store.graph_names(), (std::vector<std::string>{std::string(kCoreGraph)}));
}

TEST(SeedKb, ExemplarDataSource) {
  KbView kb(testing::shipped_kb());
  auto ds = kb.data_sources("my_input.txt");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_EQ(ds[0].iri, kb::term("myinput"));
  EXPECT_EQ(ds[0].data_rows, 6);
  EXPECT_EQ(ds[0].values_per_row, 1);
  EXPECT_EQ(ds[0].header_rows, 0);
  EXPECT_TRUE(ds[0].value_numeric);
  EXPECT_EQ(ds[0].quantity_types.size(), 1u);
  EXPECT_EQ(ds[0].data_kind_token, "input_data");
  EXPECT_EQ(ds[0].name_role_token, "filename");
  EXPECT_TRUE(kb.data_sources("other.txt").empty());
}

TEST(SeedKb, TwoAlgorithmsFoundByOutputDescription) {
  KbView kb(testing::shipped_kb());
  EXPECT_EQ(kb.algorithms().size(), 2u);
  auto mean = kb.algorithms_by_label("average value");
  ASSERT_EQ(mean.size(), 1u);
  EXPECT_EQ(mean[0].iri, kb::term("arithmetic_mean"));
  EXPECT_EQ(mean[0].time_complexity, "O(n)");
  auto sd = kb.algorithms_by_label("average value variation");
  ASSERT_EQ(sd.size(), 1u);
  EXPECT_EQ(sd[0].iri, kb::term("standard_deviation"));
  EXPECT_TRUE(kb.algorithms_by_label("median").empty());
}

TEST(SeedKb, FunctionsAndLibraries) {
  KbView kb(testing::shipped_kb());
  const auto python = kb.languages().at(0).family;
  auto mean = kb.code_functions(kb::term("arithmetic_mean"), python);
  ASSERT_EQ(mean.size(), 1u);
  EXPECT_EQ(mean[0].callable_name, "mean");
  EXPECT_EQ(mean[0].library.official_name, "numpy");
  EXPECT_EQ(mean[0].library.alias, "np");
  auto sys = kb.library(kb::term("sys"));
  ASSERT_TRUE(sys);
  EXPECT_EQ(sys->alias, std::nullopt);
  EXPECT_EQ(sys->kind, LibraryKind::kStandardLibrary);
  EXPECT_EQ(kb.exit_status(kb::kProgramExit), 0);
}

TEST(SeedKb, StructuresHaveConsistentSlots) {
  KbView kb(testing::shipped_kb());
  auto structures = kb.program_structures();
  ASSERT_EQ(structures.size(), 2u);
  for (const auto& s : structures) {
    std::set<std::int64_t> emission, composition;
    for (const auto& sec : s.sections) {
      emission.insert(sec.emission_order);
      composition.insert(sec.composition_order);
    }
    EXPECT_EQ(emission.size(), s.sections.size()) << s.name;
    EXPECT_EQ(composition.size(), s.sections.size()) << s.name;
    EXPECT_TRUE(std::is_sorted(s.sections.begin(), s.sections.end(),
                               [](const auto& a, const auto& b) {
                                 return a.emission_order < b.emission_order;
                               }));
  }
}

TEST(SeedKb, NamingPatternsAndLanguage) {
  KbView kb(testing::shipped_kb());
  auto patterns = kb.naming_patterns();
  ASSERT_EQ(patterns.size(), 3u);
  std::set<NamingPatternId> ids;
  for (const auto& p : patterns) ids.insert(p.id);
  EXPECT_EQ(ids.size(), 3u);
  auto langs = kb.languages();
  ASSERT_EQ(langs.size(), 1u);
  EXPECT_EQ(langs[0].tag, "Python-3.8");
  EXPECT_EQ(langs[0].source_file_extension, ".py");
}

// The KB describes the input file but never stores its values.
TEST(SeedKb, HoldsNoRawDataValues) {
  const auto xs = testing::fixture_values();
  const std::set<double> values(xs.begin(), xs.end());
  ASSERT_EQ(values.size(), 6u);
  for (const auto& q : testing::shipped_kb().quads(kCoreGraph)) {
    if (!q.object.is_literal()) continue;
    const auto& l = q.object.as_literal();
    if (l.datatype != xsd::kDecimal && l.datatype != xsd::kDouble) continue;
    EXPECT_FALSE(values.contains(std::stod(l.lexical))) << q.object.to_string();
  }
}

TEST(SeedKb, ValidationReportsBrokenEntries) {
  QuadStore store = testing::shipped_kb();
  testing::set_value(store, kb::term("arithmetic_mean"), kg::kMinInputCount,
                     Term::integer(0));
  auto problems = KbView(store).validate();
  ASSERT_FALSE(problems.empty());
  EXPECT_NE(problems[0].find("minInputCount"), std::string::npos);
}

}  // namespace
}  // namespace kgsynth

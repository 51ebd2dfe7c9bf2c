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

#include "kgsynth/resolver.hpp"
#include "test_support.hpp"

namespace kgsynth {
namespace {

using Kind = ResolveError::Kind;
using testing::add;

ProblemStatement exemplar() {
  return parse_problem_statement(testing::read_text(testing::exemplar_statement()));
}

ResolveError resolve_error(const ProblemStatement& ps, const QuadStore& store) {
  try {
    resolve(ps, KbView(store));
  } catch (const ResolveError& e) {
    return e;
  }
  ADD_FAILURE() << "resolved unexpectedly";
  return ResolveError(Kind::kUnsupported, "none");
}

// A second algorithm advertising the same output as arithmetic_mean.
void add_rival_mean(QuadStore& store, const std::string& complexity) {
  const auto r = kb::term("rival_mean");
  add(store, r, rdf::kType, iri(kg::kAlgorithm));
  add(store, r, kg::kHasName, lit("rival_mean"));
  add(store, r, kg::kOutputDescription, lit("average value"));
  add(store, r, kg::kMinInputCount, Term::integer(1));
  add(store, r, kg::kTimeComplexity, lit(complexity));
}

TEST(Resolver, ExemplarPlan) {
  auto plan = resolve(exemplar(), KbView(testing::shipped_kb()));
  EXPECT_EQ(plan.data_source.iri, kb::term("myinput"));
  ASSERT_EQ(plan.calculations.size(), 2u);
  EXPECT_EQ(plan.calculations[0].label, "average value");
  EXPECT_EQ(plan.calculations[0].algorithm.iri, kb::term("arithmetic_mean"));
  EXPECT_EQ(plan.calculations[0].function.callable_name, "mean");
  EXPECT_EQ(plan.calculations[1].algorithm.iri, kb::term("standard_deviation"));
  EXPECT_EQ(plan.calculations[1].function.callable_name, "std");
  EXPECT_EQ(plan.reader_function.callable_name, "loadtxt");
  EXPECT_EQ(plan.reader_function.library.official_name, "numpy");
  EXPECT_EQ(plan.report_action, ReportAction::kPrintValues);
  EXPECT_EQ(plan.exit_action, kb::kProgramExit);
  EXPECT_EQ(plan.exit_status, 0);
  EXPECT_EQ(plan.exit_function.iri, kb::term("sys_exit"));
  EXPECT_EQ(plan.structure.name, "Input_Calculate_Output");
  EXPECT_EQ(plan.language.tag, "Python-3.8");
  EXPECT_EQ(plan.program_basename, "hello_analytic");
}

TEST(Resolver, IsDeterministicAndKeepsRequestOrder) {
  const KbView kb(testing::shipped_kb());
  auto ps = exemplar();
  EXPECT_EQ(resolve(ps, kb), resolve(ps, kb));
  std::reverse(ps.requested_calculations.begin(), ps.requested_calculations.end());
  auto plan = resolve(ps, kb);
  EXPECT_EQ(plan.calculations[0].algorithm.iri, kb::term("standard_deviation"));
  EXPECT_EQ(plan.calculations[1].algorithm.iri, kb::term("arithmetic_mean"));
}

TEST(Resolver, UnknownNamesFailWithKind) {
  const auto& store = testing::shipped_kb();
  auto ps = exemplar();
  ps.data_source_names = {"missing.txt"};
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kNoDataSource);

  ps = exemplar();
  ps.requested_calculations = {"median"};
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kNoAlgorithm);

  ps = exemplar();
  ps.program_requirements.push_back("draw chart");
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kNoStructure);

  ps = exemplar();
  ps.programming_language = "Fortran-77";
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kNoLanguage);

  ps = exemplar();
  ps.data_source_names = {"my_input.txt", "my_input.txt"};
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kUnsupported);
}

TEST(Resolver, TooFewRowsIsIncompatible) {
  QuadStore store = testing::shipped_kb();
  testing::set_value(store, kb::term("myinput"), kg::kDataRowCount, Term::integer(1));
  auto e = resolve_error(exemplar(), store);
  EXPECT_EQ(e.kind(), Kind::kIncompatible);
  ASSERT_EQ(e.details().size(), 1u);
  EXPECT_NE(e.details()[0].find("min_input_count"), std::string::npos);

  // Two values are the minimum for both algorithms.
  testing::set_value(store, kb::term("myinput"), kg::kDataRowCount, Term::integer(2));
  EXPECT_NO_THROW(resolve(exemplar(), KbView(store)));
}

TEST(Compatibility, EachConstraint) {
  AlgorithmInfo alg;
  alg.min_input_count = 3;
  alg.input_numeric = true;
  alg.inputs_same_quantity = true;
  DataSourceInfo ds;
  ds.value_numeric = true;
  ds.data_rows = 3;
  ds.values_per_row = 1;
  ds.quantity_types = {"q"};
  EXPECT_TRUE(check_compatibility(alg, ds).empty());

  auto only = [&](DataSourceInfo d, const std::string& constraint) {
    auto v = check_compatibility(alg, d);
    ASSERT_EQ(v.size(), 1u) << constraint;
    EXPECT_EQ(v[0].constraint, constraint);
  };
  auto d = ds;
  d.value_numeric = false;
  only(d, "input_numeric");
  d = ds;
  d.data_rows = 1;
  d.values_per_row = 2;
  only(d, "min_input_count");
  d = ds;
  d.quantity_types = {"q", "r"};
  only(d, "inputs_same_quantity");
  d.values_per_row = 3;  // more values do not fix the quantity mix
  only(d, "inputs_same_quantity");
}

TEST(Compatibility, ComplexityRanks) {
  EXPECT_LT(complexity_rank("O(1)"), complexity_rank("O(log n)"));
  EXPECT_LT(complexity_rank("O(log n)"), complexity_rank("O(n)"));
  EXPECT_LT(complexity_rank("O(n)"), complexity_rank("O(n log n)"));
  EXPECT_LT(complexity_rank("O(n log n)"), complexity_rank("O(n^2)"));
  EXPECT_LT(complexity_rank("O(n^2)"), complexity_rank("O(2^n)"));
  EXPECT_EQ(complexity_rank("O(nlogn)"), complexity_rank("O(n log n)"));
}

TEST(SelectCandidate, RankDecidesAndTiesAreAmbiguous) {
  std::vector<std::pair<std::string, int>> xs = {{"a", 2}, {"b", 1}, {"c", 3}};
  auto name = [](const auto& x) { return x.first; };
  auto rank = [](const auto& x) { return x.second; };
  EXPECT_EQ((select_candidate<std::pair<std::string, int>>("x", xs, name, rank).first),
            "b");
  xs.push_back({"d", 1});
  try {
    select_candidate<std::pair<std::string, int>>("x", xs, name, rank);
    ADD_FAILURE();
  } catch (const ResolveError& e) {
    EXPECT_EQ(e.kind(), Kind::kAmbiguous);
    EXPECT_EQ(e.details(), (std::vector<std::string>{"b", "d"}));
  }
  std::vector<std::pair<std::string, int>> one = {{"z", 9}};
  EXPECT_EQ((select_candidate<std::pair<std::string, int>>("x", one, name).first), "z");
}

TEST(Resolver, CheaperAlgorithmWinsAndEqualCostIsAmbiguous) {
  QuadStore store = testing::shipped_kb();
  add_rival_mean(store, "O(n log n)");
  auto plan = resolve(exemplar(), KbView(store));
  EXPECT_EQ(plan.calculations[0].algorithm.iri, kb::term("arithmetic_mean"));

  QuadStore tie = testing::shipped_kb();
  add_rival_mean(tie, "O(n)");
  EXPECT_EQ(resolve_error(exemplar(), tie).kind(), Kind::kAmbiguous);
}

TEST(Resolver, StructureWithFewestExtraRequirementsWins) {
  auto ps = exemplar();
  ps.requested_calculations = {"average value"};
  ps.program_requirements = {"read input data", "report result"};
  auto plan = resolve(ps, KbView(testing::shipped_kb()));
  EXPECT_EQ(plan.structure.name, "Input_Output");

  QuadStore store = testing::shipped_kb();
  const auto twin = kb::term("Twin_Output");
  add(store, twin, rdfs::kSubClassOf, iri(kg::kProgramStructure));
  add(store, twin, kg::kHasName, lit("Twin_Output"));
  add(store, twin, kg::kSatisfiesRequirement, iri(kb::term("req_read_input_data")));
  add(store, twin, kg::kSatisfiesRequirement, iri(kb::term("req_report_result")));
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kAmbiguous);
}

TEST(Resolver, LanguageTagSpecificity) {
  QuadStore store = testing::shipped_kb();
  const auto l = kb::term("python_3_8_10");
  add(store, l, rdf::kType, iri(kg::kProgrammingLanguage));
  add(store, l, kg::kLanguageTag, lit("Python-3.8.10"));
  add(store, l, kg::kInFamily, iri(kb::term("Python")));
  add(store, l, kg::kSourceFileExtension, lit(".py"));
  const KbView kb(store);
  auto ps = exemplar();
  EXPECT_EQ(resolve(ps, kb).language.tag, "Python-3.8");
  ps.programming_language = "Python";
  EXPECT_EQ(resolve(ps, kb).language.tag, "Python-3.8.10");
  ps.programming_language = "Python-3";
  EXPECT_EQ(resolve(ps, kb).language.tag, "Python-3.8.10");
  ps.programming_language = "Pyth";
  EXPECT_EQ(resolve_error(ps, store).kind(), Kind::kNoLanguage);
}

}  // namespace
}  // namespace kgsynth

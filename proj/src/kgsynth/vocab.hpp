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

// IRIs shared between the shipped ontologies and the reasoning code. Any
// name used here must also appear in kb/*.ttl under the same namespace.

#pragma once

#include <string>
#include <string_view>

namespace kgsynth {

namespace rdf {
inline constexpr std::string_view kNs =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string kType = std::string(kNs) + "type";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view kNs = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string kLabel = std::string(kNs) + "label";
inline const std::string kSubClassOf = std::string(kNs) + "subClassOf";
}  // namespace rdfs

namespace xsd {
inline constexpr std::string_view kNs = "http://www.w3.org/2001/XMLSchema#";
inline const std::string kString = std::string(kNs) + "string";
inline const std::string kInteger = std::string(kNs) + "integer";
inline const std::string kDecimal = std::string(kNs) + "decimal";
inline const std::string kDouble = std::string(kNs) + "double";
inline const std::string kBoolean = std::string(kNs) + "boolean";
}  // namespace xsd

namespace owl {
inline constexpr std::string_view kNs = "http://www.w3.org/2002/07/owl#";
inline const std::string kOntology = std::string(kNs) + "Ontology";
inline const std::string kImports = std::string(kNs) + "imports";
inline const std::string kClass = std::string(kNs) + "Class";
}  // namespace owl

// Core vocabulary of the knowledge base: classes and properties for the
// data, algorithm and code pillars.
namespace kg {
inline constexpr std::string_view kNs = "https://kgsynth.dev/ns/core#";
inline std::string term(std::string_view local) {
  return std::string(kNs) + std::string(local);
}

// pillars
inline const std::string kInPillar = term("inPillar");
inline const std::string kDataPillar = term("DataPillar");
inline const std::string kAlgorithmsPillar = term("AlgorithmsPillar");
inline const std::string kCodePillar = term("CodePillar");
inline const std::string kGeneralPillar = term("GeneralPillar");

inline const std::string kHasName = term("hasName");

// data
inline const std::string kDataSource = term("DataSource");
inline const std::string kHasContainer = term("hasContainer");
inline const std::string kHasFormat = term("hasFormat");
inline const std::string kHasEncoding = term("hasEncoding");
inline const std::string kHasValueDatatype = term("hasValueDatatype");
inline const std::string kHeaderRowCount = term("headerRowCount");
inline const std::string kDataRowCount = term("dataRowCount");
inline const std::string kValuesPerRow = term("valuesPerRow");
inline const std::string kHasQuantityType = term("hasQuantityType");
inline const std::string kLocation = term("location");
inline const std::string kHasDataKind = term("hasDataKind");
inline const std::string kNameRole = term("nameRole");
inline const std::string kNamingToken = term("namingToken");
inline const std::string kIsNumeric = term("isNumeric");

// algorithms
inline const std::string kAlgorithm = term("Algorithm");
inline const std::string kOutputDescription = term("outputDescription");
inline const std::string kMinInputCount = term("minInputCount");
inline const std::string kRequiresNumericInput = term("requiresNumericInput");
inline const std::string kRequiresSameQuantity = term("requiresSameQuantity");
inline const std::string kOutputArity = term("outputArity");
inline const std::string kOutputQuantity = term("outputQuantity");
inline const std::string kTimeComplexity = term("timeComplexity");

// code
inline const std::string kCodeFunction = term("CodeFunction");
inline const std::string kCallableName = term("callableName");
inline const std::string kInLibrary = term("inLibrary");
inline const std::string kForLanguage = term("forLanguage");
inline const std::string kHasPurpose = term("hasPurpose");
inline const std::string kHasArgument = term("hasArgument");
inline const std::string kArgumentIndex = term("argumentIndex");
inline const std::string kArgumentRole = term("argumentRole");
inline const std::string kReturnRole = term("returnRole");
inline const std::string kLibrary = term("Library");
inline const std::string kOfficialName = term("officialName");
inline const std::string kAlias = term("alias");
inline const std::string kLibraryKind = term("libraryKind");
inline const std::string kReadCapability = term("ReadCapability");
inline const std::string kReadsFormat = term("readsFormat");
inline const std::string kReadsValueDatatype = term("readsValueDatatype");
inline const std::string kReadsContainer = term("readsContainer");
inline const std::string kExitStatus = term("exitStatus");

inline const std::string kProgrammingLanguage = term("ProgrammingLanguage");
inline const std::string kLanguageTag = term("languageTag");
inline const std::string kInFamily = term("inFamily");
inline const std::string kFamilyName = term("familyName");
inline const std::string kSourceFileExtension = term("sourceFileExtension");
inline const std::string kParadigm = term("paradigm");
inline const std::string kArgumentSeparator = term("argumentSeparator");
inline const std::string kReportLabelSuffix = term("reportLabelSuffix");

inline const std::string kProgramStructure = term("ProgramStructure");
inline const std::string kSatisfiesRequirement = term("satisfiesRequirement");
inline const std::string kHasSlot = term("hasSlot");
inline const std::string kSlotSection = term("slotSection");
inline const std::string kEmissionOrder = term("emissionOrder");
inline const std::string kCompositionOrder = term("compositionOrder");
inline const std::string kSectionPurpose = term("sectionPurpose");
inline const std::string kImportLibraries = term("ImportLibraries");
inline const std::string kReadInput = term("ReadInput");
inline const std::string kCalculateQuantity = term("CalculateQuantity");
inline const std::string kReportResult = term("ReportResult");
inline const std::string kCleanUpProgram = term("CleanUpProgram");

inline const std::string kNamingPattern = term("NamingPattern");
inline const std::string kPatternId = term("patternId");
inline const std::string kJoiner = term("joiner");
inline const std::string kHasComponent = term("hasComponent");
inline const std::string kComponentIndex = term("componentIndex");
inline const std::string kComponentKind = term("componentKind");
inline const std::string kDataKindToken = term("DataKindToken");
inline const std::string kNameRoleToken = term("NameRoleToken");
inline const std::string kFunctionNameToken = term("FunctionNameToken");

inline const std::string kStatementVariation = term("StatementVariation");
inline const std::string kStatementKind = term("statementKind");
inline const std::string kVariationCondition = term("variationCondition");
inline const std::string kHasElement = term("hasElement");
inline const std::string kElementOrder = term("elementOrder");
inline const std::string kElementKind = term("elementKind");
inline const std::string kElementText = term("elementText");
inline const std::string kSlotName = term("slotName");
inline const std::string kSeparatorBefore = term("separatorBefore");
inline const std::string kSlotElement = term("Slot");

inline const std::string kImportStatement = term("ImportStatement");
inline const std::string kAssignmentStatement = term("AssignmentStatement");
inline const std::string kCallStatement = term("CallStatement");
inline const std::string kReportStatement = term("ReportStatement");
inline const std::string kStringLiteralExpression =
    term("StringLiteralExpression");
inline const std::string kIntegerLiteralExpression =
    term("IntegerLiteralExpression");
inline const std::string kCallExpression = term("CallExpression");
inline const std::string kQualifiedName = term("QualifiedName");
inline const std::string kLibraryHasAlias = term("LibraryHasAlias");
inline const std::string kLibraryWithoutAlias = term("LibraryWithoutAlias");
}  // namespace kg

// Instance namespace of the shipped knowledge base.
namespace kb {
inline constexpr std::string_view kNs = "https://kgsynth.dev/kb#";
inline std::string term(std::string_view local) {
  return std::string(kNs) + std::string(local);
}
inline const std::string kProgramExit = term("program_exit");
inline const std::string kReportValues = term("report_values");
}  // namespace kb

// Vocabulary of the language-agnostic program graph.
namespace pla {
inline constexpr std::string_view kNs = "https://kgsynth.dev/ns/pla#";
inline std::string term(std::string_view local) {
  return std::string(kNs) + std::string(local);
}
inline const std::string kProgram = term("Program");
inline const std::string kSection = term("Section");
inline const std::string kVariable = term("Variable");
inline const std::string kAssignLiteral = term("AssignLiteral");
inline const std::string kAssignCall = term("AssignCall");
inline const std::string kReportValue = term("ReportValue");
inline const std::string kProgramExit = term("ProgramExit");
inline const std::string kImportDirective = term("ImportDirective");
inline const std::string kArgument = term("Argument");

inline const std::string kStructure = term("structure");
inline const std::string kBasename = term("basename");
inline const std::string kHasSection = term("hasSection");
inline const std::string kSectionEntity = term("sectionEntity");
inline const std::string kCompositionIndex = term("compositionIndex");
inline const std::string kEmissionIndex = term("emissionIndex");
inline const std::string kInSection = term("inSection");
inline const std::string kOrderIndex = term("orderIndex");
inline const std::string kCompositionSeq = term("compositionSeq");
inline const std::string kTarget = term("target");
inline const std::string kName = term("name");
inline const std::string kLiteralValue = term("literalValue");
inline const std::string kLiteralRole = term("literalRole");
inline const std::string kFunction = term("function");
inline const std::string kHasArgument = term("hasArgument");
inline const std::string kArgumentIndex = term("argumentIndex");
inline const std::string kArgumentVariable = term("argumentVariable");
inline const std::string kArgumentLiteral = term("argumentLiteral");
inline const std::string kLabel = term("label");
inline const std::string kSource = term("source");
inline const std::string kAction = term("action");
inline const std::string kExitStatus = term("exitStatus");
inline const std::string kLibrary = term("library");
inline const std::string kReferencesLibrary = term("referencesLibrary");
}  // namespace pla

// Vocabulary of the language-rendered program graph.
namespace plr {
inline constexpr std::string_view kNs = "https://kgsynth.dev/ns/plr#";
inline std::string term(std::string_view local) {
  return std::string(kNs) + std::string(local);
}
inline const std::string kProgram = term("Program");
inline const std::string kStatement = term("Statement");
inline const std::string kElement = term("Element");
inline const std::string kLanguage = term("language");
inline const std::string kHasStatement = term("hasStatement");
inline const std::string kStatementForm = term("statementForm");
inline const std::string kVariation = term("variation");
inline const std::string kSection = term("section");
inline const std::string kSectionEmissionIndex = term("sectionEmissionIndex");
inline const std::string kOrderIndex = term("orderIndex");
inline const std::string kHasElement = term("hasElement");
inline const std::string kElementOrder = term("elementOrder");
inline const std::string kElementText = term("elementText");
inline const std::string kSeparatorBefore = term("separatorBefore");
inline const std::string kOfficialName = term("officialName");
inline const std::string kAlias = term("alias");
inline const std::string kLhs = term("lhs");
inline const std::string kRhs = term("rhs");
inline const std::string kCallee = term("callee");
inline const std::string kHasArgument = term("hasArgument");
inline const std::string kArgumentIndex = term("argumentIndex");
inline const std::string kArgumentText = term("argumentText");
}  // namespace plr

// Named graphs.
inline constexpr std::string_view kDefaultGraph = "urn:kgsynth:default-graph";
inline constexpr std::string_view kCoreGraph = "https://kgsynth.dev/graph/core";
inline constexpr std::string_view kProgramBase = "https://kgsynth.dev/program/";

}  // namespace kgsynth

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

// Reader and writer for the Turtle subset used by the shipped ontologies:
// @prefix/@base directives, IRIs, prefixed names, the `a` keyword, `;` and
// `,` lists, string/integer/decimal/double/boolean literals, `^^` datatypes,
// language tags, `_:label` blank nodes and `#` comments. Blank-node property
// lists, collections and long strings are rejected with a diagnostic.

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgsynth/quad_store.hpp"

namespace kgsynth {

struct OntologyDocument {
  std::optional<std::string> base;
  std::map<std::string, std::string> prefixes;
  // Document order, duplicates preserved. Graph is kDefaultGraph.
  std::vector<Quad> statements;

  // IRI declared with `a owl:Ontology`, if any.
  std::optional<std::string> ontology_iri() const;
  std::vector<std::string> imports() const;
};

// Throws ParseError. `source` only labels diagnostics.
OntologyDocument parse_document(std::string_view text,
                                std::string_view source = {});

// Prefixes written by serialize() and understood by parse_patterns().
const std::map<std::string, std::string>& standard_prefixes();

// Subset-Turtle for one graph: the standard prefix header followed by the
// graph's triples grouped by subject, in term order.
std::string serialize(const QuadStore& store, std::string_view graph);

class ImportCatalog {
 public:
  // Reads `<ontology-iri> TAB relative/path.ttl` lines; paths are relative
  // to the catalog file. Blank lines and `#` comments are skipped.
  static ImportCatalog read(const std::filesystem::path& file);

  // Throws LoadError when `iri` is already mapped to a different path.
  void add(std::string iri, std::filesystem::path path);
  std::optional<std::filesystem::path> find(std::string_view iri) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::filesystem::path, std::less<>> entries_;
};

struct LoadReport {
  std::size_t files = 0;
  std::size_t quads_inserted = 0;
  std::vector<std::filesystem::path> loaded;
};

// Loads the entry documents and, transitively, everything they import via
// owl:imports, each document once. Blank node labels are renamed to
// dataset-unique ids derived from the owning document.
LoadReport load_with_imports(std::span<const std::filesystem::path> entries,
                             const ImportCatalog& catalog, QuadStore& store,
                             std::string_view graph);

// Query pattern syntax: patterns separated by `.`, each of three or four
// terms (subject predicate object [graph]). Terms are `?name`, `<iri>`,
// standard prefixed names, literals, or `a`. A pattern without a graph term
// is scoped to `default_graph`.
std::vector<Pattern> parse_patterns(std::string_view text,
                                    std::string_view default_graph);

}  // namespace kgsynth

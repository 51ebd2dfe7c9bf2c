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

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "kgsynth/term.hpp"

namespace kgsynth {

struct Quad {
  Term subject;
  Term predicate;
  Term object;
  std::string graph = std::string(kDefaultGraph);

  auto operator<=>(const Quad&) const = default;
  bool operator==(const Quad&) const = default;
};

// Throws MalformedQuad when `q` violates the quad invariants.
void validate_quad(const Quad& q);

struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

inline Variable var(std::string name) { return Variable{std::move(name)}; }

using PatternSlot = std::variant<Term, Variable>;

// A quad pattern. A constant in the graph slot must be an IRI term.
struct Pattern {
  PatternSlot subject;
  PatternSlot predicate;
  PatternSlot object;
  PatternSlot graph;

  // Variable names in slot order, without duplicates.
  std::vector<std::string> variables() const;
};

// Variable name to bound term. All bindings produced by one query share
// the same key set, so the map order (by variable name) is the result
// order: rows are sorted lexicographically by their terms taken in
// variable-name order.
using Bindings = std::map<std::string, Term>;

class QuadStore {
 public:
  // Returns true iff the quad was not yet present.
  bool insert(Quad q);
  bool erase(const Quad& q);
  bool contains(const Quad& q) const;
  void clear_graph(std::string_view graph);

  std::size_t size() const { return size_; }
  std::size_t graph_size(std::string_view graph) const;
  std::vector<std::string> graph_names() const;

  // Quads of one graph (or of all graphs) in term order.
  std::vector<Quad> quads(std::string_view graph) const;
  std::vector<Quad> quads() const;

  std::vector<Bindings> match(const Pattern& pattern) const;

  // Natural join of the patterns on shared variable names. `patterns` must
  // not be empty.
  std::vector<Bindings> query(std::span<const Pattern> patterns) const;
  std::vector<Bindings> query(std::initializer_list<Pattern> patterns) const {
    return query(std::span<const Pattern>(patterns.begin(), patterns.size()));
  }

 private:
  using Key = std::tuple<Term, Term, Term>;
  struct GraphIndex {
    std::set<Key> spo;
    std::set<Key> pos;
    std::set<Key> osp;
  };

  void match_into(const Pattern& pattern, const Bindings& seed,
                  std::vector<Bindings>& out) const;
  void scan_graph(const std::string& graph, const GraphIndex& index,
                  const Pattern& pattern, const Bindings& seed,
                  std::vector<Bindings>& out) const;

  std::map<std::string, GraphIndex, std::less<>> graphs_;
  std::size_t size_ = 0;
};

// Convenience constructors used throughout the reasoning code.
inline Term iri(std::string value) { return Term::iri(std::move(value)); }
inline Term lit(std::string value) { return Term::literal(std::move(value)); }
inline Term graph_term(std::string_view graph) {
  return Term::iri(std::string(graph));
}

}  // namespace kgsynth

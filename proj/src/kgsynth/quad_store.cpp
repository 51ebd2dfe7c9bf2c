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

#include "kgsynth/quad_store.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "kgsynth/error.hpp"

namespace kgsynth {

void validate_quad(const Quad& q) {
  if (q.subject.is_literal())
    throw MalformedQuad("literal in subject position: " + q.subject.to_string());
  if (!q.predicate.is_iri())
    throw MalformedQuad("predicate is not an IRI: " + q.predicate.to_string());
  for (const Term* t : {&q.subject, &q.predicate, &q.object}) {
    if (t->is_iri() && !is_valid_iri(t->as_iri().value))
      throw MalformedQuad("invalid IRI: '" + t->as_iri().value + "'");
    if (t->is_blank() && t->as_blank().id.empty())
      throw MalformedQuad("empty blank node id");
    if (t->is_literal() && !is_valid_iri(t->as_literal().datatype))
      throw MalformedQuad("invalid literal datatype: '" +
                          t->as_literal().datatype + "'");
  }
  if (!is_valid_iri(q.graph))
    throw MalformedQuad("invalid graph name: '" + q.graph + "'");
}

std::vector<std::string> Pattern::variables() const {
  std::vector<std::string> out;
  for (const PatternSlot* slot : {&subject, &predicate, &object, &graph}) {
    if (const auto* v = std::get_if<Variable>(slot)) {
      if (std::find(out.begin(), out.end(), v->name) == out.end())
        out.push_back(v->name);
    }
  }
  return out;
}

bool QuadStore::insert(Quad q) {
  validate_quad(q);
  auto& index = graphs_[q.graph];
  auto [it, inserted] = index.spo.emplace(q.subject, q.predicate, q.object);
  if (!inserted) return false;
  index.pos.emplace(q.predicate, q.object, q.subject);
  index.osp.emplace(q.object, q.subject, q.predicate);
  ++size_;
  return true;
}

bool QuadStore::erase(const Quad& q) {
  auto g = graphs_.find(q.graph);
  if (g == graphs_.end()) return false;
  auto& index = g->second;
  if (index.spo.erase({q.subject, q.predicate, q.object}) == 0) return false;
  index.pos.erase({q.predicate, q.object, q.subject});
  index.osp.erase({q.object, q.subject, q.predicate});
  --size_;
  if (index.spo.empty()) graphs_.erase(g);
  return true;
}

bool QuadStore::contains(const Quad& q) const {
  auto g = graphs_.find(q.graph);
  return g != graphs_.end() &&
         g->second.spo.contains({q.subject, q.predicate, q.object});
}

void QuadStore::clear_graph(std::string_view graph) {
  auto g = graphs_.find(graph);
  if (g == graphs_.end()) return;
  size_ -= g->second.spo.size();
  graphs_.erase(g);
}

std::size_t QuadStore::graph_size(std::string_view graph) const {
  auto g = graphs_.find(graph);
  return g == graphs_.end() ? 0 : g->second.spo.size();
}

std::vector<std::string> QuadStore::graph_names() const {
  std::vector<std::string> out;
  for (const auto& [name, index] : graphs_) out.push_back(name);
  return out;
}

std::vector<Quad> QuadStore::quads(std::string_view graph) const {
  std::vector<Quad> out;
  auto g = graphs_.find(graph);
  if (g == graphs_.end()) return out;
  out.reserve(g->second.spo.size());
  for (const auto& [s, p, o] : g->second.spo)
    out.push_back(Quad{s, p, o, g->first});
  return out;
}

std::vector<Quad> QuadStore::quads() const {
  std::vector<Quad> out;
  out.reserve(size_);
  for (const auto& [name, index] : graphs_)
    for (const auto& [s, p, o] : index.spo) out.push_back(Quad{s, p, o, name});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Constant value of a slot under `seed`, or nullopt for a free variable.
std::optional<Term> resolve(const PatternSlot& slot, const Bindings& seed) {
  if (const auto* t = std::get_if<Term>(&slot)) return *t;
  const auto& name = std::get<Variable>(slot).name;
  if (auto it = seed.find(name); it != seed.end()) return it->second;
  return std::nullopt;
}

// Binds `slot` to `value` in `row`; false on conflict.
bool bind(const PatternSlot& slot, const Term& value, Bindings& row) {
  if (const auto* t = std::get_if<Term>(&slot)) return *t == value;
  const auto& name = std::get<Variable>(slot).name;
  auto [it, inserted] = row.emplace(name, value);
  return inserted || it->second == value;
}

// Iterates keys of `index` whose first component equals `first` (and whose
// second equals `second` when given).
template <typename Fn>
void for_prefix(const std::set<std::tuple<Term, Term, Term>>& index,
                const Term& first, const std::optional<Term>& second, Fn&& fn) {
  auto it = index.lower_bound({first, second.value_or(Term()), Term()});
  for (; it != index.end(); ++it) {
    if (std::get<0>(*it) != first) break;
    if (second && std::get<1>(*it) != *second) break;
    fn(*it);
  }
}

}  // namespace

void QuadStore::scan_graph(const std::string& graph, const GraphIndex& index,
                           const Pattern& pattern, const Bindings& seed,
                           std::vector<Bindings>& out) const {
  const auto s = resolve(pattern.subject, seed);
  const auto p = resolve(pattern.predicate, seed);
  const auto o = resolve(pattern.object, seed);

  const Term graph_iri = Term::iri(graph);
  auto emit = [&](const Term& ts, const Term& tp, const Term& to) {
    Bindings row = seed;
    if (bind(pattern.subject, ts, row) && bind(pattern.predicate, tp, row) &&
        bind(pattern.object, to, row) && bind(pattern.graph, graph_iri, row))
      out.push_back(std::move(row));
  };

  if (s) {
    for_prefix(index.spo, *s, p, [&](const Key& k) {
      if (!o || std::get<2>(k) == *o)
        emit(std::get<0>(k), std::get<1>(k), std::get<2>(k));
    });
  } else if (p) {
    for_prefix(index.pos, *p, o, [&](const Key& k) {
      emit(std::get<2>(k), std::get<0>(k), std::get<1>(k));
    });
  } else if (o) {
    for_prefix(index.osp, *o, std::nullopt, [&](const Key& k) {
      emit(std::get<1>(k), std::get<2>(k), std::get<0>(k));
    });
  } else {
    for (const auto& [ks, kp, ko] : index.spo) emit(ks, kp, ko);
  }
}

void QuadStore::match_into(const Pattern& pattern, const Bindings& seed,
                           std::vector<Bindings>& out) const {
  if (auto g = resolve(pattern.graph, seed)) {
    if (!g->is_iri()) return;
    auto it = graphs_.find(g->as_iri().value);
    if (it != graphs_.end()) scan_graph(it->first, it->second, pattern, seed, out);
    return;
  }
  for (const auto& [name, index] : graphs_)
    scan_graph(name, index, pattern, seed, out);
}

std::vector<Bindings> QuadStore::match(const Pattern& pattern) const {
  std::vector<Bindings> out;
  match_into(pattern, {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bindings> QuadStore::query(std::span<const Pattern> patterns) const {
  if (patterns.empty())
    throw std::invalid_argument("query needs at least one pattern");

  // Greedy join order: next is the pattern with the most bound slots.
  std::vector<const Pattern*> pending;
  for (const auto& p : patterns) pending.push_back(&p);
  std::set<std::string> bound;
  auto bound_slots = [&](const Pattern& p) {
    int n = 0;
    for (const PatternSlot* slot : {&p.subject, &p.predicate, &p.object, &p.graph}) {
      if (const auto* v = std::get_if<Variable>(slot)) n += bound.contains(v->name);
      else ++n;
    }
    return n;
  };

  std::vector<Bindings> rows{Bindings{}};
  while (!pending.empty() && !rows.empty()) {
    auto best = std::max_element(
        pending.begin(), pending.end(), [&](const Pattern* a, const Pattern* b) {
          return bound_slots(*a) < bound_slots(*b);
        });
    const Pattern& next = **best;
    pending.erase(best);

    std::vector<Bindings> joined;
    for (const auto& row : rows) match_into(next, row, joined);
    rows = std::move(joined);
    for (auto& name : next.variables()) bound.insert(std::move(name));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace kgsynth

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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "kgsynth/vocab.hpp"

namespace kgsynth {

struct Iri {
  std::string value;
  auto operator<=>(const Iri&) const = default;
};

struct Blank {
  std::string id;
  auto operator<=>(const Blank&) const = default;
};

struct Literal {
  std::string lexical;
  std::string datatype = std::string(xsd::kString);
  std::optional<std::string> language;
  auto operator<=>(const Literal&) const = default;
};

// An RDF node. The variant index doubles as the rank used by the total
// order: Iri < Blank < Literal, then field-wise lexicographic.
class Term {
 public:
  using Value = std::variant<Iri, Blank, Literal>;

  Term() : value_(Iri{}) {}

  static Term iri(std::string value);
  static Term blank(std::string id);
  static Term literal(std::string lexical,
                      std::string datatype = std::string(xsd::kString),
                      std::optional<std::string> language = std::nullopt);
  static Term integer(std::int64_t value);
  static Term boolean(bool value);

  bool is_iri() const { return std::holds_alternative<Iri>(value_); }
  bool is_blank() const { return std::holds_alternative<Blank>(value_); }
  bool is_literal() const { return std::holds_alternative<Literal>(value_); }

  const Iri& as_iri() const { return std::get<Iri>(value_); }
  const Blank& as_blank() const { return std::get<Blank>(value_); }
  const Literal& as_literal() const { return std::get<Literal>(value_); }
  const Value& value() const { return value_; }

  // IRI value, blank id or literal lexical form.
  const std::string& text() const;

  // Literal as integer; nullopt for non-integer terms.
  std::optional<std::int64_t> as_integer() const;
  std::optional<bool> as_boolean() const;

  // N-Triples-style rendering, used in diagnostics and query tables.
  std::string to_string() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;

 private:
  explicit Term(Value v) : value_(std::move(v)) {}
  Value value_;
};

bool is_valid_iri(std::string_view value);

// Escapes `"`, `\` and control characters for a double-quoted literal.
std::string escape_string(std::string_view text);

}  // namespace kgsynth

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

#include "kgsynth/term.hpp"

#include <charconv>
#include <cstdio>

namespace kgsynth {

Term Term::iri(std::string value) { return Term(Iri{std::move(value)}); }

Term Term::blank(std::string id) { return Term(Blank{std::move(id)}); }

Term Term::literal(std::string lexical, std::string datatype,
                   std::optional<std::string> language) {
  if (datatype.empty()) datatype = xsd::kString;
  return Term(Literal{std::move(lexical), std::move(datatype),
                      std::move(language)});
}

Term Term::integer(std::int64_t value) {
  return literal(std::to_string(value), xsd::kInteger);
}

Term Term::boolean(bool value) {
  return literal(value ? "true" : "false", xsd::kBoolean);
}

const std::string& Term::text() const {
  return std::visit(
      [](const auto& v) -> const std::string& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Iri>) return v.value;
        else if constexpr (std::is_same_v<T, Blank>) return v.id;
        else return v.lexical;
      },
      value_);
}

std::optional<std::int64_t> Term::as_integer() const {
  if (!is_literal()) return std::nullopt;
  const auto& l = as_literal();
  if (l.datatype != xsd::kInteger) return std::nullopt;
  std::string_view text = l.lexical;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return out;
}

std::optional<bool> Term::as_boolean() const {
  if (!is_literal()) return std::nullopt;
  const auto& l = as_literal();
  if (l.datatype != xsd::kBoolean) return std::nullopt;
  if (l.lexical == "true" || l.lexical == "1") return true;
  if (l.lexical == "false" || l.lexical == "0") return false;
  return std::nullopt;
}

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string Term::to_string() const {
  if (is_iri()) return "<" + as_iri().value + ">";
  if (is_blank()) return "_:" + as_blank().id;
  const auto& l = as_literal();
  std::string out = "\"" + escape_string(l.lexical) + "\"";
  if (l.language) return out + "@" + *l.language;
  if (l.datatype != xsd::kString) out += "^^<" + l.datatype + ">";
  return out;
}

bool is_valid_iri(std::string_view value) {
  if (value.empty()) return false;
  for (char c : value) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\')
      return false;
  }
  return true;
}

}  // namespace kgsynth

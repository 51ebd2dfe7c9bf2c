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

#include "kgsynth/ontology_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "kgsynth/error.hpp"

namespace kgsynth {
namespace {

const std::string kLangString = std::string(rdf::kNs) + "langString";

enum class Tok {
  kIriRef,
  kPName,
  kBlank,
  kString,
  kInteger,
  kDecimal,
  kDouble,
  kBoolean,
  kA,
  kPrefixDirective,
  kBaseDirective,
  kLangTag,
  kDot,
  kSemicolon,
  kComma,
  kDatatypeMark,
  kVariable,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;    // IRI body, string value, number lexeme, label...
  std::string prefix;  // kPName only
  int line = 1;
  int column = 1;
};

bool is_name_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view source, bool allow_variables)
      : text_(text), source_(source), allow_variables_(allow_variables) {}

  [[noreturn]] void fail(const std::string& message, int line, int column) const {
    throw ParseError(message, line, column, std::string(source_));
  }

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) return tok;

    const char c = text_[pos_];
    switch (c) {
      case '<': lex_iri(tok); return tok;
      case '"':
      case '\'': lex_string(tok, c); return tok;
      case '.':
        if (pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1])) {
          lex_number(tok);
        } else {
          advance();
          tok.kind = Tok::kDot;
        }
        return tok;
      case ';': advance(); tok.kind = Tok::kSemicolon; return tok;
      case ',': advance(); tok.kind = Tok::kComma; return tok;
      case '^':
        if (peek(1) != '^') fail("expected '^^'", tok.line, tok.column);
        advance();
        advance();
        tok.kind = Tok::kDatatypeMark;
        return tok;
      case '@': lex_at(tok); return tok;
      case '_':
        if (peek(1) == ':') { lex_blank(tok); return tok; }
        break;
      case '?':
        if (allow_variables_) { lex_variable(tok); return tok; }
        break;
      case '[':
        fail("blank node property lists are not supported", tok.line, tok.column);
      case '(':
        fail("collections are not supported", tok.line, tok.column);
      default:
        break;
    }
    if (is_digit(c) || c == '+' || c == '-') {
      lex_number(tok);
      return tok;
    }
    if (is_name_start(c) || c == ':') {
      lex_name(tok);
      return tok;
    }
    fail(std::string("unexpected character '") + printable(c) + "'", tok.line,
         tok.column);
  }

 private:
  static std::string printable(char c) {
    auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7F) return std::string(1, c);
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\x%02X", u);
    return buf;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_iri(Token& tok) {
    advance();  // '<'
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated IRI", tok.line, tok.column);
      char c = text_[pos_];
      if (c == '>') break;
      auto u = static_cast<unsigned char>(c);
      if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' ||
          c == '|' || c == '^' || c == '`' || c == '\\')
        fail("invalid character in IRI", line_, column_);
      tok.text += c;
      advance();
    }
    advance();  // '>'
    tok.kind = Tok::kIriRef;
  }

  std::uint32_t read_hex(int digits, const Token& tok) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (pos_ >= text_.size()) fail("truncated escape", tok.line, tok.column);
      char h = text_[pos_];
      cp <<= 4;
      if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
      else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
      else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
      else fail("invalid hex digit in escape", line_, column_);
      advance();
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      fail("escape is not a Unicode scalar value", tok.line, tok.column);
    return cp;
  }

  void lex_string(Token& tok, char quote) {
    if (peek(1) == quote && peek(2) == quote)
      fail("long (triple-quoted) strings are not supported", tok.line, tok.column);
    advance();
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string", tok.line, tok.column);
      char c = text_[pos_];
      if (c == quote) break;
      if (c == '\n' || c == '\r') fail("newline in string", line_, column_);
      if (c == '\\') {
        int el = line_, ec = column_;
        advance();
        if (pos_ >= text_.size()) fail("unterminated string", tok.line, tok.column);
        char e = text_[pos_];
        advance();
        switch (e) {
          case 't': tok.text += '\t'; break;
          case 'n': tok.text += '\n'; break;
          case 'r': tok.text += '\r'; break;
          case 'b': tok.text += '\b'; break;
          case 'f': tok.text += '\f'; break;
          case '"': tok.text += '"'; break;
          case '\'': tok.text += '\''; break;
          case '\\': tok.text += '\\'; break;
          case 'u': append_utf8(tok.text, read_hex(4, tok)); break;
          case 'U': append_utf8(tok.text, read_hex(8, tok)); break;
          default: fail("unknown string escape", el, ec);
        }
        continue;
      }
      tok.text += c;
      advance();
    }
    advance();
    tok.kind = Tok::kString;
  }

  void lex_at(Token& tok) {
    advance();
    std::string word;
    while (pos_ < text_.size() &&
           (is_name_char(text_[pos_]) && text_[pos_] != '_'))
      word += text_[pos_], advance();
    if (word == "prefix") {
      tok.kind = Tok::kPrefixDirective;
    } else if (word == "base") {
      tok.kind = Tok::kBaseDirective;
    } else if (!word.empty() && word.front() != '-') {
      tok.kind = Tok::kLangTag;
      tok.text = word;
    } else {
      fail("expected directive or language tag after '@'", tok.line, tok.column);
    }
  }

  void lex_blank(Token& tok) {
    advance();
    advance();
    while (pos_ < text_.size() && is_name_char(text_[pos_]))
      tok.text += text_[pos_], advance();
    if (tok.text.empty()) fail("empty blank node label", tok.line, tok.column);
    tok.kind = Tok::kBlank;
  }

  void lex_variable(Token& tok) {
    advance();
    while (pos_ < text_.size() && is_name_char(text_[pos_]))
      tok.text += text_[pos_], advance();
    if (tok.text.empty()) fail("empty variable name", tok.line, tok.column);
    tok.kind = Tok::kVariable;
  }

  void lex_number(Token& tok) {
    std::string lexeme;
    if (peek() == '+' || peek() == '-') lexeme += peek(), advance();
    while (is_digit(peek())) lexeme += peek(), advance();
    tok.kind = Tok::kInteger;
    if (peek() == '.' && is_digit(peek(1))) {
      lexeme += '.';
      advance();
      while (is_digit(peek())) lexeme += peek(), advance();
      tok.kind = Tok::kDecimal;
    }
    if (peek() == 'e' || peek() == 'E') {
      lexeme += peek();
      advance();
      if (peek() == '+' || peek() == '-') lexeme += peek(), advance();
      if (!is_digit(peek())) fail("malformed exponent", line_, column_);
      while (is_digit(peek())) lexeme += peek(), advance();
      tok.kind = Tok::kDouble;
    }
    bool has_digit = std::any_of(lexeme.begin(), lexeme.end(), is_digit);
    if (!has_digit) fail("malformed number", tok.line, tok.column);
    tok.text = lexeme;
  }

  void lex_name(Token& tok) {
    std::string prefix;
    while (pos_ < text_.size() && is_name_char(text_[pos_]))
      prefix += text_[pos_], advance();
    if (peek() != ':') {
      if (prefix == "a") tok.kind = Tok::kA;
      else if (prefix == "true" || prefix == "false") tok.kind = Tok::kBoolean;
      else fail("unexpected bare word '" + prefix + "'", tok.line, tok.column);
      tok.text = prefix;
      return;
    }
    advance();  // ':'
    std::string local;
    while (pos_ < text_.size() &&
           (is_name_char(text_[pos_]) || text_[pos_] == '.' || text_[pos_] == ':'))
      local += text_[pos_], advance();
    // A trailing '.' terminates the statement rather than the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
      --column_;
    }
    tok.kind = Tok::kPName;
    tok.prefix = prefix;
    tok.text = local;
  }

  std::string_view text_;
  std::string_view source_;
  bool allow_variables_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool has_scheme(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0])))
    return false;
  for (char c : iri) {
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' &&
        c != '.')
      return false;
  }
  return false;
}

std::string resolve_relative(const std::string& base, const std::string& rel) {
  if (rel.empty()) return base;
  if (rel.front() == '#') return base.substr(0, base.find('#')) + rel;
  if (rel.front() == '/') {
    auto scheme_end = base.find("://");
    if (scheme_end == std::string::npos) return base.substr(0, base.find(':') + 1) + rel;
    auto path_start = base.find('/', scheme_end + 3);
    return base.substr(0, path_start) + rel;
  }
  auto cut = base.find_last_of('/');
  std::string dir = cut == std::string::npos ? base : base.substr(0, cut + 1);
  return dir + rel;
}

class Parser {
 public:
  Parser(std::string_view text, std::string_view source, bool pattern_mode)
      : lexer_(text, source, pattern_mode), source_(source) {
    advance();
  }

  OntologyDocument parse_document() {
    while (current_.kind != Tok::kEnd) {
      if (current_.kind == Tok::kPrefixDirective) {
        parse_prefix();
      } else if (current_.kind == Tok::kBaseDirective) {
        advance();
        const Token iri_tok = expect(Tok::kIriRef, "expected IRI after @base");
        doc_.base = absolute(iri_tok);
        expect(Tok::kDot, "expected '.' after @base");
      } else {
        parse_triples();
      }
    }
    return std::move(doc_);
  }

  std::vector<Pattern> parse_patterns(std::string_view default_graph) {
    doc_.prefixes = standard_prefixes();
    std::vector<Pattern> out;
    while (current_.kind != Tok::kEnd) {
      std::vector<PatternSlot> slots;
      const Token first = current_;
      while (current_.kind != Tok::kDot && current_.kind != Tok::kEnd) {
        if (slots.size() == 4)
          fail("a pattern has at most four terms", current_);
        if (current_.kind == Tok::kVariable) {
          slots.emplace_back(Variable{current_.text});
          advance();
        } else if (current_.kind == Tok::kA && slots.size() == 1) {
          slots.emplace_back(Term::iri(rdf::kType));
          advance();
        } else {
          slots.emplace_back(parse_object());
        }
      }
      if (slots.size() < 3) fail("a pattern needs at least three terms", first);
      if (slots.size() == 3) slots.emplace_back(graph_term(default_graph));
      Pattern p{slots[0], slots[1], slots[2], slots[3]};
      check_pattern(p, first);
      out.push_back(std::move(p));
      if (current_.kind == Tok::kDot) advance();
    }
    if (out.empty()) throw ParseError("empty pattern list", 1, 1, std::string(source_));
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    lexer_.fail(message, at.line, at.column);
  }

  void check_pattern(const Pattern& p, const Token& at) const {
    if (const auto* t = std::get_if<Term>(&p.subject); t && t->is_literal())
      fail("literal in subject position", at);
    if (const auto* t = std::get_if<Term>(&p.predicate); t && !t->is_iri())
      fail("predicate must be an IRI", at);
    if (const auto* t = std::get_if<Term>(&p.graph); t && !t->is_iri())
      fail("graph must be an IRI", at);
  }

  void advance() { current_ = lexer_.next(); }

  Token expect(Tok kind, const char* message) {
    if (current_.kind != kind) fail(message, current_);
    Token tok = current_;
    advance();
    return tok;
  }

  std::string absolute(const Token& tok) const {
    if (has_scheme(tok.text)) return tok.text;
    if (!doc_.base) fail("relative IRI <" + tok.text + "> without @base", tok);
    return resolve_relative(*doc_.base, tok.text);
  }

  void parse_prefix() {
    advance();
    if (current_.kind != Tok::kPName || !current_.text.empty())
      fail("expected 'name:' after @prefix", current_);
    std::string name = current_.prefix;
    advance();
    const Token iri_tok = expect(Tok::kIriRef, "expected IRI in @prefix");
    doc_.prefixes[name] = absolute(iri_tok);
    expect(Tok::kDot, "expected '.' after @prefix");
  }

  std::string expand(const Token& tok) const {
    auto it = doc_.prefixes.find(tok.prefix);
    if (it == doc_.prefixes.end())
      fail("undeclared prefix '" + tok.prefix + ":'", tok);
    return it->second + tok.text;
  }

  Term parse_iri_like() {
    Token tok = current_;
    advance();
    std::string value = tok.kind == Tok::kIriRef ? absolute(tok) : expand(tok);
    if (!is_valid_iri(value)) fail("invalid IRI '" + value + "'", tok);
    return Term::iri(std::move(value));
  }

  Term parse_subject() {
    switch (current_.kind) {
      case Tok::kIriRef:
      case Tok::kPName:
        return parse_iri_like();
      case Tok::kBlank: {
        Term t = Term::blank(current_.text);
        advance();
        return t;
      }
      default:
        fail("expected subject", current_);
    }
  }

  Term parse_verb() {
    if (current_.kind == Tok::kA) {
      advance();
      return Term::iri(rdf::kType);
    }
    if (current_.kind == Tok::kIriRef || current_.kind == Tok::kPName)
      return parse_iri_like();
    fail("expected predicate", current_);
  }

  Term parse_object() {
    switch (current_.kind) {
      case Tok::kIriRef:
      case Tok::kPName:
      case Tok::kBlank:
        return parse_subject();
      case Tok::kString: {
        std::string value = current_.text;
        advance();
        if (current_.kind == Tok::kLangTag) {
          std::string lang = current_.text;
          advance();
          return Term::literal(std::move(value), kLangString, std::move(lang));
        }
        if (current_.kind == Tok::kDatatypeMark) {
          advance();
          if (current_.kind != Tok::kIriRef && current_.kind != Tok::kPName)
            fail("expected datatype IRI after '^^'", current_);
          Term dt = parse_iri_like();
          return Term::literal(std::move(value), dt.as_iri().value);
        }
        return Term::literal(std::move(value));
      }
      case Tok::kInteger:
      case Tok::kDecimal:
      case Tok::kDouble:
      case Tok::kBoolean: {
        const std::string& dt = current_.kind == Tok::kInteger   ? xsd::kInteger
                                : current_.kind == Tok::kDecimal ? xsd::kDecimal
                                : current_.kind == Tok::kDouble  ? xsd::kDouble
                                                                 : xsd::kBoolean;
        Term t = Term::literal(current_.text, dt);
        advance();
        return t;
      }
      default:
        fail("expected object", current_);
    }
  }

  void parse_triples() {
    Term subject = parse_subject();
    while (true) {
      Term verb = parse_verb();
      while (true) {
        Term object = parse_object();
        doc_.statements.push_back(Quad{subject, verb, std::move(object)});
        if (current_.kind != Tok::kComma) break;
        advance();
      }
      if (current_.kind != Tok::kSemicolon) break;
      while (current_.kind == Tok::kSemicolon) advance();
      if (current_.kind == Tok::kDot) break;
    }
    expect(Tok::kDot, "expected '.' at end of statement");
  }

  Lexer lexer_;
  std::string_view source_;
  Token current_;
  OntologyDocument doc_;
};

// Compact form of an IRI using the standard prefixes when the local part
// stays a valid prefixed name.
std::string abbreviate(const std::string& iri) {
  for (const auto& [name, ns] : standard_prefixes()) {
    if (iri.size() <= ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    std::string_view local(iri.data() + ns.size(), iri.size() - ns.size());
    bool ok = is_name_start(local.front()) || is_digit(local.front());
    for (char c : local) ok = ok && is_name_char(c);
    if (ok) return name + ":" + std::string(local);
  }
  return "<" + iri + ">";
}

std::string write_term(const Term& t) {
  if (t.is_iri()) return abbreviate(t.as_iri().value);
  if (t.is_blank()) return "_:" + t.as_blank().id;
  const auto& l = t.as_literal();
  std::string out = "\"" + escape_string(l.lexical) + "\"";
  if (l.language) return out + "@" + *l.language;
  if (l.datatype == xsd::kString) return out;
  return out + "^^" + abbreviate(l.datatype);
}

std::uint32_t fnv1a(std::string_view text) {
  std::uint32_t h = 2166136261u;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619u;
  }
  return h;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::optional<std::string> OntologyDocument::ontology_iri() const {
  for (const auto& q : statements) {
    if (q.subject.is_iri() && q.predicate.as_iri().value == rdf::kType &&
        q.object == Term::iri(owl::kOntology))
      return q.subject.as_iri().value;
  }
  return std::nullopt;
}

std::vector<std::string> OntologyDocument::imports() const {
  std::vector<std::string> out;
  for (const auto& q : statements) {
    if (q.predicate.as_iri().value == owl::kImports && q.object.is_iri())
      out.push_back(q.object.as_iri().value);
  }
  return out;
}

OntologyDocument parse_document(std::string_view text, std::string_view source) {
  return Parser(text, source, false).parse_document();
}

std::vector<Pattern> parse_patterns(std::string_view text,
                                    std::string_view default_graph) {
  return Parser(text, "query", true).parse_patterns(default_graph);
}

const std::map<std::string, std::string>& standard_prefixes() {
  static const std::map<std::string, std::string> prefixes = {
      {"rdf", std::string(rdf::kNs)}, {"rdfs", std::string(rdfs::kNs)},
      {"xsd", std::string(xsd::kNs)}, {"owl", std::string(owl::kNs)},
      {"kg", std::string(kg::kNs)},   {"kb", std::string(kb::kNs)},
      {"pla", std::string(pla::kNs)}, {"plr", std::string(plr::kNs)},
  };
  return prefixes;
}

std::string serialize(const QuadStore& store, std::string_view graph) {
  std::ostringstream out;
  for (const auto& [name, ns] : standard_prefixes())
    out << "@prefix " << name << ": <" << ns << "> .\n";

  const auto quads = store.quads(graph);
  const Term* subject = nullptr;
  const Term* predicate = nullptr;
  for (const auto& q : quads) {
    if (subject && *subject == q.subject) {
      if (*predicate == q.predicate) {
        out << " ,\n        " << write_term(q.object);
      } else {
        out << " ;\n    " << (q.predicate.as_iri().value == rdf::kType
                                  ? "a"
                                  : write_term(q.predicate))
            << " " << write_term(q.object);
      }
    } else {
      if (subject) out << " .\n";
      out << "\n" << write_term(q.subject) << " "
          << (q.predicate.as_iri().value == rdf::kType ? "a"
                                                         : write_term(q.predicate))
          << " " << write_term(q.object);
    }
    subject = &q.subject;
    predicate = &q.predicate;
  }
  if (subject) out << " .\n";
  return out.str();
}

ImportCatalog ImportCatalog::read(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw LoadError("cannot read catalog " + file.string());
  ImportCatalog catalog;
  const auto dir = file.parent_path();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto tab = line.find('\t', first);
    if (tab == std::string::npos)
      throw LoadError(file.string() + ":" + std::to_string(lineno) +
                      ": expected '<iri> TAB path'");
    std::string iri = line.substr(first, tab - first);
    std::string path = line.substr(tab + 1);
    while (!iri.empty() && iri.back() == ' ') iri.pop_back();
    if (iri.size() >= 2 && iri.front() == '<' && iri.back() == '>')
      iri = iri.substr(1, iri.size() - 2);
    path.erase(0, path.find_first_not_of(" \t"));
    while (!path.empty() && (path.back() == ' ' || path.back() == '\t'))
      path.pop_back();
    if (!is_valid_iri(iri) || path.empty())
      throw LoadError(file.string() + ":" + std::to_string(lineno) +
                      ": malformed catalog entry");
    catalog.add(std::move(iri), dir / path);
  }
  return catalog;
}

void ImportCatalog::add(std::string iri, std::filesystem::path path) {
  path = path.lexically_normal();
  auto [it, inserted] = entries_.emplace(iri, path);
  if (!inserted && it->second != path)
    throw LoadError("catalog maps <" + iri + "> to both " + it->second.string() +
                    " and " + path.string());
}

std::optional<std::filesystem::path> ImportCatalog::find(std::string_view iri) const {
  auto it = entries_.find(iri);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

LoadReport load_with_imports(std::span<const std::filesystem::path> entries,
                             const ImportCatalog& catalog, QuadStore& store,
                             std::string_view graph) {
  LoadReport report;
  std::set<std::string> visited;
  std::deque<std::pair<std::filesystem::path, std::string>> queue;
  for (const auto& e : entries) queue.emplace_back(e, std::string());

  while (!queue.empty()) {
    auto [path, via] = queue.front();
    queue.pop_front();

    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    if (ec) canonical = path.lexically_normal();
    const std::string path_key = "file:" + canonical.string();
    if (visited.contains(path_key)) continue;
    if (!std::filesystem::is_regular_file(path))
      throw LoadError("ontology file not found: " + path.string() +
                      (via.empty() ? "" : " (imported as <" + via + ">)"));

    OntologyDocument doc = parse_document(read_file(path), path.string());
    const auto ontology = doc.ontology_iri();
    visited.insert(path_key);
    if (ontology && !visited.insert(*ontology).second) continue;

    const auto imports = doc.imports();
    const std::string key = ontology.value_or(path_key);
    char tag[16];
    std::snprintf(tag, sizeof tag, "d%08x_", fnv1a(key));
    auto rename = [&](Term& t) {
      if (t.is_blank()) t = Term::blank(tag + t.as_blank().id);
    };
    for (auto& q : doc.statements) {
      rename(q.subject);
      rename(q.object);
      q.graph = std::string(graph);
      if (store.insert(std::move(q))) ++report.quads_inserted;
    }
    ++report.files;
    report.loaded.push_back(path);

    for (const auto& import : imports) {
      if (visited.contains(import)) continue;
      auto target = catalog.find(import);
      if (!target)
        throw LoadError("import <" + import + "> of " + path.string() +
                        " is not in the catalog");
      queue.emplace_back(*target, import);
    }
  }
  return report;
}

}  // namespace kgsynth

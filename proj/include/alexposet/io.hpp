#pragma once

// Poset documents: a line-oriented text format with a JSON mirror, and
// Graphviz DOT output of Hasse diagrams.
//
// Text format (UTF-8, '#' starts a comment, blank lines ignored):
//
//   poset <name>
//   el <label>          one per element, in id order
//   cov <a> <b>         a < b, b covers a
//   base <label>        optional basepoint
//
// JSON mirror: {"name": ..., "elements": [...], "covers": [[a, b], ...],
// "basepoint": label or null}.

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alexposet/errors.hpp"
#include "alexposet/poset.hpp"
#include "alexposet/reduction.hpp"

namespace alexposet {

struct PosetDocument {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::optional<std::string> basepoint;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

inline Poset to_poset(const PosetDocument& doc) { return from_covers(doc.elements, doc.covers); }

inline PointedPoset to_pointed(const PosetDocument& doc) {
  Poset p = to_poset(doc);
  if (!doc.basepoint) throw Error("document has no basepoint");
  const Id base = p.id_of(*doc.basepoint);
  return PointedPoset(std::move(p), base);
}

/// Normalised document of P: elements in id order, covers sorted.
inline PosetDocument to_document(const Poset& p, std::string name,
                                 std::optional<Id> basepoint = std::nullopt) {
  PosetDocument doc;
  doc.name = std::move(name);
  doc.elements = p.labels();
  for (auto [a, b] : p.covers()) doc.covers.emplace_back(p.label(a), p.label(b));
  if (basepoint) doc.basepoint = p.label(*basepoint);
  return doc;
}

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace detail

/// Parses the text format. Structural problems raise ParseError; order
/// problems (cycles, unknown or duplicate labels) surface from to_poset.
inline PosetDocument parse_poset(std::string_view text) {
  PosetDocument doc;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto toks = detail::split_line(line);
    if (toks.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const auto& kw = toks[0].text;
    const auto expect = [&](std::size_t n) {
      if (toks.size() != n + 1) {
        const std::size_t col = toks.size() > n + 1 ? toks[n + 1].column : line.size() + 1;
        throw ParseError("'" + kw + "' expects " + std::to_string(n) + " argument(s)", line_no, col);
      }
    };
    if (kw == "poset") {
      if (have_header) throw ParseError("duplicate 'poset' header", line_no, toks[0].column);
      expect(1);
      doc.name = toks[1].text;
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("expected 'poset <name>' header", line_no, toks[0].column);
    if (kw == "el") {
      expect(1);
      doc.elements.push_back(toks[1].text);
    } else if (kw == "cov") {
      expect(2);
      doc.covers.emplace_back(toks[1].text, toks[2].text);
    } else if (kw == "base") {
      expect(1);
      if (doc.basepoint) throw ParseError("duplicate 'base' line", line_no, toks[0].column);
      doc.basepoint = toks[1].text;
    } else {
      throw ParseError("unknown directive '" + kw + "'", line_no, toks[0].column);
    }
    if (eol == text.size()) break;
  }
  if (!have_header) throw ParseError("missing 'poset <name>' header", line_no == 0 ? 1 : line_no, 1);
  return doc;
}

inline std::string emit_poset(const PosetDocument& doc) {
  std::ostringstream os;
  os << "poset " << doc.name << '\n';
  for (const auto& e : doc.elements) os << "el " << e << '\n';
  for (const auto& [a, b] : doc.covers) os << "cov " << a << ' ' << b << '\n';
  if (doc.basepoint) os << "base " << *doc.basepoint << '\n';
  return os.str();
}

inline nlohmann::json to_json(const PosetDocument& doc) {
  nlohmann::json j;
  j["name"] = doc.name;
  j["elements"] = doc.elements;
  j["covers"] = nlohmann::json::array();
  for (const auto& [a, b] : doc.covers) j["covers"].push_back({a, b});
  j["basepoint"] = doc.basepoint ? nlohmann::json(*doc.basepoint) : nlohmann::json(nullptr);
  return j;
}

inline PosetDocument parse_poset_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON", line, col);
  }
  try {
    PosetDocument doc;
    doc.name = j.at("name").get<std::string>();
    doc.elements = j.at("elements").get<std::vector<std::string>>();
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw ParseError("cover must be a pair", 1, 1);
      doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    if (j.contains("basepoint") && !j["basepoint"].is_null())
      doc.basepoint = j["basepoint"].get<std::string>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed poset document: ") + e.what(), 1, 1);
  }
}

namespace detail {
inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

/// Hasse diagram as a DOT digraph, edges from covered to covering element.
/// With a trace, removed elements are filled gray and annotated with the
/// element that absorbs them under the composed retraction.
inline std::string emit_dot(const Poset& p, const std::string& name = "P",
                            const DismantlingTrace* trace = nullptr) {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(name) << " {\n  rankdir=BT;\n";
  for (Id x = 0; x < p.size(); ++x) {
    os << "  " << detail::dot_quote(p.label(x));
    if (trace && !trace->final.test(x)) {
      const Id target = trace->composed(x);
      os << " [style=filled, fillcolor=gray, xlabel=" << detail::dot_quote("-> " + p.label(target))
         << "]";
    }
    os << ";\n";
  }
  for (auto [a, b] : p.covers())
    os << "  " << detail::dot_quote(p.label(a)) << " -> " << detail::dot_quote(p.label(b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace alexposet

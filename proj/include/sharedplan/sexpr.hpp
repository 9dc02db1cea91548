#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace sharedplan {

/// Minimal s-expression value: an atom or a list of s-expressions.
/// Every node remembers the source position it was parsed from, so
/// later semantic passes can report errors against the original text.
class SExpr {
 public:
  static SExpr atom(std::string text, int line = 0, int col = 0) {
    SExpr s;
    s.data_ = std::move(text);
    s.line = line;
    s.col = col;
    return s;
  }

  static SExpr list(std::vector<SExpr> items, int line = 0, int col = 0) {
    SExpr s;
    s.data_ = std::move(items);
    s.line = line;
    s.col = col;
    return s;
  }

  bool is_atom() const { return std::holds_alternative<std::string>(data_); }
  bool is_list() const { return !is_atom(); }

  const std::string& atom_text() const {
    if (!is_atom()) throw ParseError("expected atom", line, col);
    return std::get<std::string>(data_);
  }

  const std::vector<SExpr>& items() const {
    if (!is_list()) throw ParseError("expected list", line, col);
    return std::get<std::vector<SExpr>>(data_);
  }

  std::size_t size() const { return items().size(); }
  const SExpr& at(std::size_t i) const {
    const auto& v = items();
    if (i >= v.size()) throw ParseError("list too short", line, col);
    return v[i];
  }

  /// Head atom of a list form, e.g. "recipe" in (recipe ...).
  const std::string& head() const {
    if (items().empty()) throw ParseError("empty list form", line, col);
    return at(0).atom_text();
  }

  bool operator==(const SExpr& other) const { return data_ == other.data_; }

  int line = 0;
  int col = 0;

 private:
  std::variant<std::string, std::vector<SExpr>> data_;
};

namespace detail {

inline bool is_atom_char(char c) {
  switch (c) {
    case '(':
    case ')':
    case ';':
    case ' ':
    case '\t':
    case '\r':
    case '\n':
      return false;
    default:
      return true;
  }
}

class SExprReader {
 public:
  explicit SExprReader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (!done()) {
      out.push_back(read_node());
      skip_space();
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!done()) {
      char c = peek();
      if (c == ';') {
        while (!done() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read_node() {
    skip_space();
    if (done()) throw ParseError("unexpected end of input", line_, col_);
    int l = line_, c = col_;
    if (peek() == '(') {
      advance();
      std::vector<SExpr> items;
      for (;;) {
        skip_space();
        if (done()) throw ParseError("unterminated list", l, c);
        if (peek() == ')') {
          advance();
          return SExpr::list(std::move(items), l, c);
        }
        items.push_back(read_node());
      }
    }
    if (peek() == ')') throw ParseError("unexpected ')'", l, c);
    std::string atom;
    while (!done() && is_atom_char(peek())) {
      atom.push_back(peek());
      advance();
    }
    return SExpr::atom(std::move(atom), l, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace detail

inline std::vector<SExpr> parse_sexprs(std::string_view text) {
  return detail::SExprReader(text).read_all();
}

/// Parses text containing exactly one s-expression.
inline SExpr parse_sexpr(std::string_view text) {
  auto all = parse_sexprs(text);
  if (all.size() != 1) throw ParseError("expected exactly one s-expression", 1, 1);
  return std::move(all.front());
}

inline void append_text(const SExpr& s, std::string& out) {
  if (s.is_atom()) {
    out += s.atom_text();
    return;
  }
  out += '(';
  const auto& items = s.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    append_text(items[i], out);
  }
  out += ')';
}

/// Canonical single-line rendering; parse(to_text(x)) == x.
inline std::string to_text(const SExpr& s) {
  std::string out;
  append_text(s, out);
  return out;
}

}  // namespace sharedplan

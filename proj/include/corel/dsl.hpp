#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "corel/bicomodule.hpp"
#include "corel/coalgebra.hpp"
#include "corel/relation.hpp"
#include "corel/setrel.hpp"
#include "corel/subspace.hpp"

// Text format for coalgebra/relation documents (.crel) and set relation
// documents (.srel). One grammar covers both:
//
//   document  := (coalgebra | relation | set)*
//   coalgebra := "coalgebra" NAME "{" "basis" NAME+ line* "}"
//   line      := "delta" NAME "=" texpr | "eps" NAME "=" rational
//   relation  := "relation" NAME "on" NAME "{" body "}"
//   body      := "span" texpr ("," texpr)*
//              | "basis" NAME+ (("left"|"right"|"embed") NAME "=" texpr)*
//   set       := "set" NAME "{" "elements" NAME+ ";" "pairs" pair* "}"
//   pair      := "(" NAME "," NAME ")"
//   texpr     := "0" | ["-"] term (("+"|"-") term)*
//   term      := [rational] NAME "*" NAME
//   rational  := digits ["/" digits]          (denominator nonzero)
//
// "#" starts a line comment. Keywords are reserved and cannot name basis
// vectors, elements or declarations. Every basis vector of a coalgebra
// needs its delta and eps line, and every basis vector of an explicit-mode
// relation needs left, right and embed lines; omissions are parse errors,
// there are no defaults. Span-mode relations are elaborated at parse time
// into the sub-bicomodule the span generates, or rejected if it is not one.

namespace corel::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message,
             std::vector<std::string> expected = {})
      : std::runtime_error(message), line(line), column(column), expected(std::move(expected)) {}

  int line;
  int column;
  std::vector<std::string> expected;
};

struct CoalgebraDecl {
  std::string name;
  Coalgebra coalg;

  friend bool operator==(const CoalgebraDecl& a, const CoalgebraDecl& b) {
    return a.name == b.name && a.coalg.dim == b.coalg.dim &&
           a.coalg.basis_names == b.coalg.basis_names && a.coalg.delta == b.coalg.delta &&
           a.coalg.eps == b.coalg.eps;
  }
};

struct RelationDecl {
  std::string name;
  std::string coalgebra;  // name of the carrier coalgebra declaration
  bool span_mode = true;
  std::vector<std::string> basis_names;  // generated g0.. in span mode
  Relation rel;

  friend bool operator==(const RelationDecl& a, const RelationDecl& b) {
    return a.name == b.name && a.coalgebra == b.coalgebra && a.span_mode == b.span_mode &&
           a.basis_names == b.basis_names && a.rel.bicomod.dim == b.rel.bicomod.dim &&
           a.rel.bicomod.left == b.rel.bicomod.left && a.rel.bicomod.right == b.rel.bicomod.right &&
           a.rel.r == b.rel.r;
  }
};

struct SetDecl {
  std::string name;
  FinSetRelation set;

  friend bool operator==(const SetDecl& a, const SetDecl& b) {
    return a.name == b.name && a.set == b.set;
  }
};

using Decl = std::variant<CoalgebraDecl, RelationDecl, SetDecl>;

struct Document {
  std::vector<Decl> decls;

  const CoalgebraDecl* find_coalgebra(const std::string& name) const {
    for (const auto& d : decls)
      if (const auto* c = std::get_if<CoalgebraDecl>(&d); c && c->name == name) return c;
    return nullptr;
  }

  std::vector<const RelationDecl*> relations() const {
    std::vector<const RelationDecl*> out;
    for (const auto& d : decls)
      if (const auto* r = std::get_if<RelationDecl>(&d)) out.push_back(r);
    return out;
  }

  std::vector<const SetDecl*> sets() const {
    std::vector<const SetDecl*> out;
    for (const auto& d : decls)
      if (const auto* s = std::get_if<SetDecl>(&d)) out.push_back(s);
    return out;
  }

  friend bool operator==(const Document& a, const Document& b) { return a.decls == b.decls; }
};

namespace detail {

enum class Tok { Name, Number, LBrace, RBrace, LParen, RParen, Comma, Semi, Equal, Star, Plus, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

inline const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {"coalgebra", "relation", "set",  "on",
                                           "basis",     "delta",    "eps",  "span",
                                           "elements",  "pairs",    "left", "right",
                                           "embed"};
  return kw;
}

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t by) {
    col += static_cast<int>(by);
    i += by;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const int tline = line;
    const int tcol = col;
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
              (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
        ++j;
      out.push_back({Tok::Name, std::string(src.substr(i, j - i)), tline, tcol});
      advance(j - i);
      continue;
    }
    if (c >= '0' && c <= '9') {
      std::size_t j = i;
      while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
      if (j < src.size() && src[j] == '/' && j + 1 < src.size() && src[j + 1] >= '0' &&
          src[j + 1] <= '9') {
        ++j;
        while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tline, tcol});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '=': kind = Tok::Equal; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      default:
        throw ParseError(tline, tcol, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), tline, tcol});
    advance(1);
  }
  out.push_back({Tok::End, "<end of input>", line, col});
  return out;
}

struct NameTable {
  const std::vector<std::string>* names = nullptr;
  std::map<std::string, int> index;

  explicit NameTable(const std::vector<std::string>& n) : names(&n) {
    for (int i = 0; i < static_cast<int>(n.size()); ++i) index.emplace(n[i], i);
  }
  int dim() const { return static_cast<int>(names->size()); }
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Document run() {
    Document doc;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (t.kind != Tok::Name)
        throw ParseError(t.line, t.col, "expected a declaration",
                         {"coalgebra", "relation", "set"});
      if (t.text == "coalgebra") doc.decls.push_back(parse_coalgebra());
      else if (t.text == "relation") doc.decls.push_back(parse_relation());
      else if (t.text == "set") doc.decls.push_back(parse_set());
      else
        throw ParseError(t.line, t.col, "expected a declaration, got '" + t.text + "'",
                         {"coalgebra", "relation", "set"});
    }
    return doc;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::set<std::string> decl_names_;
  std::map<std::string, Coalgebra> coalgebras_;

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
  }
  Token consume() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    consume();
    return true;
  }
  Token expect(Tok kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind)
      throw ParseError(t.line, t.col, "expected " + what + ", got '" + t.text + "'", {what});
    return consume();
  }
  bool at_keyword(const std::string& kw) const {
    return peek().kind == Tok::Name && peek().text == kw;
  }
  Token expect_keyword(const std::string& kw) {
    const Token& t = peek();
    if (!at_keyword(kw))
      throw ParseError(t.line, t.col, "expected '" + kw + "', got '" + t.text + "'", {kw});
    return consume();
  }
  Token identifier(const std::string& what) {
    Token t = expect(Tok::Name, what);
    if (keywords().count(t.text))
      throw ParseError(t.line, t.col, "'" + t.text + "' is a reserved word", {what});
    return t;
  }

  std::string declaration_name() {
    Token t = identifier("a declaration name");
    if (!decl_names_.insert(t.text).second)
      throw ParseError(t.line, t.col, "duplicate declaration name '" + t.text + "'");
    return t.text;
  }

  Rational signed_rational() {
    const bool negative = accept(Tok::Minus);
    Token t = expect(Tok::Number, "a rational literal");
    auto q = parse_rational(t.text);
    if (!q) throw ParseError(t.line, t.col, "invalid rational literal '" + t.text + "'");
    return negative ? Rational(-*q) : *q;
  }

  int table_lookup(const NameTable& table, const Token& t) const {
    auto it = table.index.find(t.text);
    if (it == table.index.end())
      throw ParseError(t.line, t.col, "unknown basis name '" + t.text + "'");
    return it->second;
  }

  /// texpr := "0" | ["-"] term (("+"|"-") term)*, each term a tensor of a
  /// left-table name and a right-table name. Repeated terms accumulate.
  RatMatrix tensor_expr(const NameTable& lhs, const NameTable& rhs) {
    RatMatrix v(lhs.dim() * rhs.dim(), 1);
    // a term never starts with a keyword, so "0" before one is the zero vector
    if (peek().kind == Tok::Number && peek().text == "0" &&
        (peek(1).kind != Tok::Name || keywords().count(peek(1).text))) {
      consume();
      return v;
    }
    bool negative = accept(Tok::Minus);
    for (;;) {
      Rational coeff = 1;
      if (peek().kind == Tok::Number) {
        Token t = consume();
        auto q = parse_rational(t.text);
        if (!q) throw ParseError(t.line, t.col, "invalid rational literal '" + t.text + "'");
        coeff = *q;
      }
      const Token lt = identifier("a basis name");
      const int li = table_lookup(lhs, lt);
      expect(Tok::Star, "'*'");
      const Token rt = identifier("a basis name");
      const int ri = table_lookup(rhs, rt);
      const int idx = li * rhs.dim() + ri;
      if (negative) v(idx, 0) -= coeff;
      else v(idx, 0) += coeff;
      if (accept(Tok::Plus)) negative = false;
      else if (accept(Tok::Minus)) negative = true;
      else break;
    }
    return v;
  }

  std::vector<std::string> basis_name_list() {
    std::vector<std::string> names;
    std::set<std::string> seen;
    while (peek().kind == Tok::Name && !keywords().count(peek().text)) {
      Token t = consume();
      if (!seen.insert(t.text).second)
        throw ParseError(t.line, t.col, "duplicate basis name '" + t.text + "'");
      names.push_back(t.text);
    }
    if (names.empty()) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, "expected at least one basis name", {"a basis name"});
    }
    return names;
  }

  Decl parse_coalgebra() {
    consume();  // "coalgebra"
    const std::string name = declaration_name();
    expect(Tok::LBrace, "'{'");
    expect_keyword("basis");
    std::vector<std::string> names = basis_name_list();
    const NameTable table(names);
    const int n = table.dim();

    RatMatrix delta(n * n, n);
    RatMatrix eps(1, n);
    std::vector<bool> delta_set(n, false), eps_set(n, false);
    for (;;) {
      if (at_keyword("delta")) {
        consume();
        const Token t = identifier("a basis name");
        const int j = table_lookup(table, t);
        if (delta_set[j])
          throw ParseError(t.line, t.col, "duplicate delta line for '" + t.text + "'");
        delta_set[j] = true;
        expect(Tok::Equal, "'='");
        const RatMatrix col = tensor_expr(table, table);
        for (int i = 0; i < n * n; ++i) delta(i, j) = col(i, 0);
      } else if (at_keyword("eps")) {
        consume();
        const Token t = identifier("a basis name");
        const int j = table_lookup(table, t);
        if (eps_set[j]) throw ParseError(t.line, t.col, "duplicate eps line for '" + t.text + "'");
        eps_set[j] = true;
        expect(Tok::Equal, "'='");
        eps(0, j) = signed_rational();
      } else {
        break;
      }
    }
    const Token closing = expect(Tok::RBrace, "'}'");
    for (int j = 0; j < n; ++j) {
      if (!delta_set[j])
        throw ParseError(closing.line, closing.col, "missing delta line for '" + names[j] + "'");
      if (!eps_set[j])
        throw ParseError(closing.line, closing.col, "missing eps line for '" + names[j] + "'");
    }
    Coalgebra c{n, names, std::move(delta), std::move(eps)};
    coalgebras_.emplace(name, c);
    return CoalgebraDecl{name, std::move(c)};
  }

  Decl parse_relation() {
    consume();  // "relation"
    const std::string name = declaration_name();
    expect_keyword("on");
    const Token ct = identifier("a coalgebra name");
    const auto found = coalgebras_.find(ct.text);
    if (found == coalgebras_.end())
      throw ParseError(ct.line, ct.col, "unknown coalgebra '" + ct.text + "'");
    const Coalgebra& c = found->second;
    const NameTable ctable(c.basis_names);
    const int n = c.dim;
    expect(Tok::LBrace, "'{'");

    if (at_keyword("span")) {
      const Token span_tok = consume();
      std::vector<RatMatrix> cols;
      cols.push_back(tensor_expr(ctable, ctable));
      while (accept(Tok::Comma)) cols.push_back(tensor_expr(ctable, ctable));
      expect(Tok::RBrace, "'}'");
      RatMatrix raw(n * n, static_cast<int>(cols.size()));
      for (int j = 0; j < raw.cols(); ++j)
        for (int i = 0; i < n * n; ++i) raw(i, j) = cols[j](i, 0);
      InduceResult induced = induce_from_subspace(c, Subspace::span_of(raw));
      if (const auto* fail = std::get_if<NotSubBicomodule>(&induced))
        throw ParseError(span_tok.line, span_tok.col,
                         "span does not define a sub-bicomodule: " + fail->detail);
      auto& ok = std::get<InducedSubBicomodule>(induced);
      std::vector<std::string> rnames;
      for (int j = 0; j < ok.bicomodule.dim; ++j) rnames.push_back("g" + std::to_string(j));
      Relation rel = make_relation(std::move(ok.bicomodule), std::move(ok.inclusion));
      return RelationDecl{name, ct.text, true, std::move(rnames), std::move(rel)};
    }

    if (!at_keyword("basis")) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, "expected 'span' or 'basis', got '" + t.text + "'",
                       {"span", "basis"});
    }
    consume();
    std::vector<std::string> rnames = basis_name_list();
    const NameTable rtable(rnames);
    const int m = rtable.dim();
    RatMatrix left(n * m, m), right(m * n, m), embed(n * n, m);
    std::vector<bool> left_set(m, false), right_set(m, false), embed_set(m, false);
    for (;;) {
      std::string which;
      if (at_keyword("left")) which = "left";
      else if (at_keyword("right")) which = "right";
      else if (at_keyword("embed")) which = "embed";
      else break;
      consume();
      const Token t = identifier("a basis name");
      const int j = table_lookup(rtable, t);
      expect(Tok::Equal, "'='");
      if (which == "left") {
        if (left_set[j])
          throw ParseError(t.line, t.col, "duplicate left line for '" + t.text + "'");
        left_set[j] = true;
        const RatMatrix col = tensor_expr(ctable, rtable);
        for (int i = 0; i < n * m; ++i) left(i, j) = col(i, 0);
      } else if (which == "right") {
        if (right_set[j])
          throw ParseError(t.line, t.col, "duplicate right line for '" + t.text + "'");
        right_set[j] = true;
        const RatMatrix col = tensor_expr(rtable, ctable);
        for (int i = 0; i < m * n; ++i) right(i, j) = col(i, 0);
      } else {
        if (embed_set[j])
          throw ParseError(t.line, t.col, "duplicate embed line for '" + t.text + "'");
        embed_set[j] = true;
        const RatMatrix col = tensor_expr(ctable, ctable);
        for (int i = 0; i < n * n; ++i) embed(i, j) = col(i, 0);
      }
    }
    const Token closing = expect(Tok::RBrace, "'}'");
    for (int j = 0; j < m; ++j) {
      if (!left_set[j])
        throw ParseError(closing.line, closing.col, "missing left line for '" + rnames[j] + "'");
      if (!right_set[j])
        throw ParseError(closing.line, closing.col, "missing right line for '" + rnames[j] + "'");
      if (!embed_set[j])
        throw ParseError(closing.line, closing.col, "missing embed line for '" + rnames[j] + "'");
    }
    Relation rel = make_relation(Bicomodule{c, m, std::move(left), std::move(right)},
                                 std::move(embed));
    return RelationDecl{name, ct.text, false, std::move(rnames), std::move(rel)};
  }

  Decl parse_set() {
    consume();  // "set"
    const std::string name = declaration_name();
    expect(Tok::LBrace, "'{'");
    expect_keyword("elements");
    std::vector<std::string> elements = basis_name_list();
    const NameTable table(elements);
    expect(Tok::Semi, "';'");
    expect_keyword("pairs");
    std::vector<std::pair<int, int>> pairs;
    while (accept(Tok::LParen)) {
      const Token a = identifier("an element name");
      const int ai = table_lookup(table, a);
      expect(Tok::Comma, "','");
      const Token b = identifier("an element name");
      const int bi = table_lookup(table, b);
      expect(Tok::RParen, "')'");
      pairs.emplace_back(ai, bi);
    }
    expect(Tok::RBrace, "'}'");
    return SetDecl{name, FinSetRelation::make(std::move(elements), std::move(pairs))};
  }
};

}  // namespace detail

inline Document parse_document(std::string_view source) { return detail::Parser(source).run(); }

/// Renders a column vector over a tensor basis back to expression syntax,
/// e.g. "x*y + 3/2 y*z" or "0". Inverse of the texpr parser up to term
/// order and canonical coefficients.
inline std::string format_tensor(const RatMatrix& v, const std::vector<std::string>& left,
                                 const std::vector<std::string>& right) {
  const int dim_r = static_cast<int>(right.size());
  std::string out;
  for (int idx = 0; idx < v.rows(); ++idx) {
    const Rational& c = v(idx, 0);
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string piece = left[idx / dim_r] + "*" + right[idx % dim_r];
    if (mag != 1) piece = to_string(mag) + " " + piece;
    if (out.empty()) out = negative ? "-" + piece : piece;
    else out += (negative ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

/// Same for a plain (non-tensor) basis, e.g. "x - z".
inline std::string format_vector(const RatMatrix& v, const std::vector<std::string>& names) {
  std::string out;
  for (int idx = 0; idx < v.rows(); ++idx) {
    const Rational& c = v(idx, 0);
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    std::string piece = names[idx];
    if (mag != 1) piece = to_string(mag) + " " + piece;
    if (out.empty()) out = negative ? "-" + piece : piece;
    else out += (negative ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

namespace detail {

inline void emit_decl(std::ostringstream& out, const CoalgebraDecl& d) {
  const auto& names = d.coalg.basis_names;
  out << "coalgebra " << d.name << " {\n  basis";
  for (const auto& n : names) out << " " << n;
  out << "\n";
  for (int j = 0; j < d.coalg.dim; ++j)
    out << "  delta " << names[j] << " = " << format_tensor(d.coalg.delta.col(j), names, names)
        << "\n";
  for (int j = 0; j < d.coalg.dim; ++j)
    out << "  eps " << names[j] << " = " << to_string(d.coalg.eps(0, j)) << "\n";
  out << "}\n";
}

inline void emit_decl(std::ostringstream& out, const RelationDecl& d) {
  const auto& cnames = d.rel.bicomod.over.basis_names;
  out << "relation " << d.name << " on " << d.coalgebra << " {\n";
  if (d.span_mode) {
    out << "  span ";
    for (int j = 0; j < d.rel.r.cols(); ++j) {
      if (j > 0) out << ", ";
      out << format_tensor(d.rel.r.col(j), cnames, cnames);
    }
    out << "\n";
  } else {
    out << "  basis";
    for (const auto& n : d.basis_names) out << " " << n;
    out << "\n";
    for (int j = 0; j < d.rel.bicomod.dim; ++j) {
      out << "  left " << d.basis_names[j] << " = "
          << format_tensor(d.rel.bicomod.left.col(j), cnames, d.basis_names) << "\n";
      out << "  right " << d.basis_names[j] << " = "
          << format_tensor(d.rel.bicomod.right.col(j), d.basis_names, cnames) << "\n";
      out << "  embed " << d.basis_names[j] << " = "
          << format_tensor(d.rel.r.col(j), cnames, cnames) << "\n";
    }
  }
  out << "}\n";
}

inline void emit_decl(std::ostringstream& out, const SetDecl& d) {
  out << "set " << d.name << " {\n  elements";
  for (const auto& e : d.set.elements) out << " " << e;
  out << " ;\n  pairs";
  for (const auto& [a, b] : d.set.pairs)
    out << " (" << d.set.elements[a] << "," << d.set.elements[b] << ")";
  out << "\n}\n";
}

}  // namespace detail

/// Deterministic rendering; parse_document(emit_document(d)) == d for any
/// parsed document (span-mode relations are already canonical after parse,
/// so the echelonized span re-parses to the same relation).
inline std::string emit_document(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& d : doc.decls) {
    if (!first) out << "\n";
    first = false;
    std::visit([&out](const auto& decl) { detail::emit_decl(out, decl); }, d);
  }
  return out.str();
}

/// Wraps a linearisation as a parseable document: the grouplike coalgebra
/// on the elements plus the span-mode relation its pairs induce. Names are
/// derived from the set declaration's name.
inline Document linearise_document(const FinSetRelation& s, const std::string& set_name) {
  Linearisation lin = linearise(s);
  Document doc;
  std::vector<std::string> rnames;
  for (int j = 0; j < lin.relation.bicomod.dim; ++j) rnames.push_back("g" + std::to_string(j));
  doc.decls.push_back(CoalgebraDecl{set_name + "_lin", lin.coalgebra});
  doc.decls.push_back(
      RelationDecl{set_name + "_rel", set_name + "_lin", true, std::move(rnames),
                   std::move(lin.relation)});
  return doc;
}

}  // namespace corel::dsl

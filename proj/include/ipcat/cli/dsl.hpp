#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ipcat/core/errors.hpp"

namespace ipcat::dsl {

/// An object term: a name under `dags` applications of dag.
struct ObjTerm {
  std::string name;
  int dags = 0;

  friend bool operator==(const ObjTerm&, const ObjTerm&) = default;
};

enum class Kind { name, id, iota, phi, dag, adj, inv, ip, dip, comp };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Kind kind;
  std::string name;       // Kind::name
  ObjTerm obj;            // id, iota, phi
  std::vector<ExprPtr> args;

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.name != b.name || !(a.obj == b.obj) || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (!(*a.args[i] == *b.args[i])) return false;
    return true;
  }
};

struct Equation {
  ExprPtr lhs, rhs;

  friend bool operator==(const Equation& a, const Equation& b) { return *a.lhs == *b.lhs && *a.rhs == *b.rhs; }
};

inline ExprPtr make_name(std::string n) { return std::make_shared<const Expr>(Expr{Kind::name, std::move(n), {}, {}}); }
inline ExprPtr make_obj(Kind k, ObjTerm o) { return std::make_shared<const Expr>(Expr{k, {}, std::move(o), {}}); }
inline ExprPtr make_unary(Kind k, ExprPtr e) { return std::make_shared<const Expr>(Expr{k, {}, {}, {std::move(e)}}); }
inline ExprPtr make_binary(Kind k, ExprPtr a, ExprPtr b) {
  return std::make_shared<const Expr>(Expr{k, {}, {}, {std::move(a), std::move(b)}});
}

inline bool is_reserved(std::string_view w) {
  for (auto r : {"id", "iota", "phi", "dag", "adj", "inv", "ip", "dip"})
    if (w == r) return true;
  return false;
}

inline bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::string print(const ObjTerm& o);
std::string print(const Expr& e);

inline std::string print(const ObjTerm& o) {
  std::string s = o.name;
  for (int i = 0; i < o.dags; ++i) s = "dag(" + s + ")";
  return s;
}

/// Canonical form: " ; " between factors, parentheses only around a
/// composite on the right of ";".
inline std::string print(const Expr& e) {
  switch (e.kind) {
    case Kind::name: return e.name;
    case Kind::id: return "id[" + print(e.obj) + "]";
    case Kind::iota: return "iota[" + print(e.obj) + "]";
    case Kind::phi: return "phi[" + print(e.obj) + "]";
    case Kind::dag: return "dag(" + print(*e.args[0]) + ")";
    case Kind::adj: return "adj(" + print(*e.args[0]) + ")";
    case Kind::inv: return "inv(" + print(*e.args[0]) + ")";
    case Kind::ip: return "ip(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
    case Kind::dip: return "dip(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
    case Kind::comp: {
      const auto& r = *e.args[1];
      return print(*e.args[0]) + " ; " + (r.kind == Kind::comp ? "(" + print(r) + ")" : print(r));
    }
  }
  return {};
}

inline std::string print(const Equation& eq) { return print(*eq.lhs) + " == " + print(*eq.rhs); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr expression() {
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected input '" + std::string(src_.substr(pos_, 1)) + "'");
    return e;
  }

  Equation equation() {
    auto lhs = expr();
    expect("==");
    auto rhs = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected input '" + std::string(src_.substr(pos_, 1)) + "'");
    return {lhs, rhs};
  }

 private:
  // expr := term (";" term)*
  ExprPtr expr() {
    auto e = term();
    while (peek(";")) {
      expect(";");
      e = make_binary(Kind::comp, e, term());
    }
    return e;
  }

  ExprPtr term() {
    skip_ws();
    if (peek("(")) {
      expect("(");
      auto e = expr();
      expect(")");
      return e;
    }
    const auto word = name();
    if (word == "id" || word == "iota" || word == "phi") {
      expect("[");
      auto o = object();
      expect("]");
      return make_obj(word == "id" ? Kind::id : word == "iota" ? Kind::iota : Kind::phi, o);
    }
    if (word == "dag" || word == "adj" || word == "inv") {
      expect("(");
      auto e = expr();
      expect(")");
      return make_unary(word == "dag" ? Kind::dag : word == "adj" ? Kind::adj : Kind::inv, e);
    }
    if (word == "ip" || word == "dip") {
      expect("(");
      auto a = expr();
      expect(",");
      auto b = expr();
      expect(")");
      return make_binary(word == "ip" ? Kind::ip : Kind::dip, a, b);
    }
    if (is_reserved(word)) fail("reserved word '" + word + "' used as a name");
    return make_name(word);
  }

  // obj := name | "dag" "(" obj ")"
  ObjTerm object() {
    const auto word = name();
    if (word == "dag") {
      expect("(");
      auto o = object();
      expect(")");
      ++o.dags;
      return o;
    }
    if (is_reserved(word)) fail("reserved word '" + word + "' used as an object name");
    return {word, 0};
  }

  std::string name() {
    skip_ws();
    if (pos_ >= src_.size() || !is_name_start(src_[pos_]))
      fail(pos_ >= src_.size() ? "unexpected end of input" : "expected a name");
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_name_char(src_[pos_])) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return src_.substr(pos_, tok.size()) == tok;
  }

  void expect(std::string_view tok) {
    if (!peek(tok)) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw ParseError(what, line, col);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

inline ExprPtr parse_expr(std::string_view s) { return Parser(s).expression(); }
inline Equation parse_equation(std::string_view s) { return Parser(s).equation(); }

}  // namespace ipcat::dsl

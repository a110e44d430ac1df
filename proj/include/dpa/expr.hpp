#pragma once
#include "dpa/comb.hpp"

#include <memory>

namespace dpa {

// ---------------------------------------------------------------------------
// Expression language of the command line: sums, scalar multiples, star
// products, brackets, n-ary product generators X_n, shifts d^k, divided
// powers gamma_n(-), beta applications, and named generators.
// ---------------------------------------------------------------------------
struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
  enum class Kind { Sum, Scaled, Product, Bracket, Gen, DPow, Gamma, Beta, Ident };
  Kind kind = Kind::Ident;
  std::vector<ExprPtr> kids; // Sum/Product members; Bracket pair; Scaled/Gamma body;
                             // Beta: element then arguments
  long long num = 0;         // scalar, generator arity, shift exponent, power index
  std::string name;          // identifier
  std::vector<long long> comp; // beta composition parts

  bool operator==(const Expr &o) const {
    if (kind != o.kind || num != o.num || name != o.name || comp != o.comp ||
        kids.size() != o.kids.size())
      return false;
    for (size_t i = 0; i < kids.size(); ++i)
      if (!(*kids[i] == *o.kids[i])) return false;
    return true;
  }
};

inline ExprPtr mk_expr(Expr::Kind k) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  return e;
}

// ---------------------------------------------------------------------------
// Printer. Sums never occur under products or scalars in parsed trees, so the
// printed form parses back to an equal tree.
// ---------------------------------------------------------------------------
inline std::string expr_str(const Expr &e) {
  switch (e.kind) {
  case Expr::Kind::Sum: {
    std::string s;
    for (size_t i = 0; i < e.kids.size(); ++i) s += (i ? " + " : "") + expr_str(*e.kids[i]);
    return s;
  }
  case Expr::Kind::Scaled: return std::to_string(e.num) + "*" + expr_str(*e.kids[0]);
  case Expr::Kind::Product: {
    std::string s;
    for (size_t i = 0; i < e.kids.size(); ++i) s += (i ? "*" : "") + expr_str(*e.kids[i]);
    return s;
  }
  case Expr::Kind::Bracket:
    return "[" + expr_str(*e.kids[0]) + ";" + expr_str(*e.kids[1]) + "]";
  case Expr::Kind::Gen: return "X_" + std::to_string(e.num);
  case Expr::Kind::DPow: return e.num == 1 ? "d" : "d^" + std::to_string(e.num);
  case Expr::Kind::Gamma:
    return "gamma_" + std::to_string(e.num) + "(" + expr_str(*e.kids[0]) + ")";
  case Expr::Kind::Beta: {
    std::string s = "beta(" + expr_str(*e.kids[0]) + ", (";
    for (size_t i = 0; i < e.comp.size(); ++i)
      s += (i ? "," : "") + std::to_string(e.comp[i]);
    s += "); ";
    for (size_t i = 1; i < e.kids.size(); ++i) s += (i > 1 ? ", " : "") + expr_str(*e.kids[i]);
    return s + ")";
  }
  case Expr::Kind::Ident: return e.name;
  }
  fail("unreachable");
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.
//   expr   := term ('+' term)*
//   term   := [nat '*'] factor
//   factor := primary ('*' primary)*
//   primary:= '[' expr ';' expr ']' | 'X_' nat | 'd' ['^' nat]
//           | 'gamma_' nat '(' expr ')'
//           | 'beta(' expr ',' '(' nat (',' nat)* ')' ';' expr (',' expr)* ')'
//           | ident
// ---------------------------------------------------------------------------
class ExprParser {
public:
  explicit ExprParser(std::string text) : s(std::move(text)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (at < s.size()) err("trailing input");
    return e;
  }

private:
  std::string s;
  size_t at = 0;

  [[noreturn]] void err(const std::string &msg) {
    fail("parse error at position " + std::to_string(at) + ": " + msg);
  }
  void skip_ws() {
    while (at < s.size() && std::isspace((unsigned char)s[at])) ++at;
  }
  bool peek(char c) {
    skip_ws();
    return at < s.size() && s[at] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++at;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }
  bool peek_nat() {
    skip_ws();
    return at < s.size() && std::isdigit((unsigned char)s[at]);
  }
  long long nat() {
    skip_ws();
    if (!peek_nat()) err("expected a number");
    long long v = 0;
    while (at < s.size() && std::isdigit((unsigned char)s[at])) v = v * 10 + (s[at++] - '0');
    return v;
  }
  std::string ident() {
    skip_ws();
    size_t b = at;
    while (at < s.size() && (std::isalnum((unsigned char)s[at]) || s[at] == '_')) ++at;
    if (b == at) err("expected an identifier");
    return s.substr(b, at - b);
  }

  ExprPtr expr() {
    ExprPtr first = term();
    if (!peek('+')) return first;
    ExprPtr sum = mk_expr(Expr::Kind::Sum);
    sum->kids.push_back(first);
    while (eat('+')) sum->kids.push_back(term());
    return sum;
  }

  ExprPtr term() {
    if (peek_nat()) {
      long long c = nat();
      expect('*');
      ExprPtr sc = mk_expr(Expr::Kind::Scaled);
      sc->num = c;
      sc->kids.push_back(factor());
      return sc;
    }
    return factor();
  }

  ExprPtr factor() {
    ExprPtr first = primary();
    if (!peek('*')) return first;
    ExprPtr prod = mk_expr(Expr::Kind::Product);
    prod->kids.push_back(first);
    while (eat('*')) prod->kids.push_back(primary());
    return prod;
  }

  std::vector<long long> composition() {
    expect('(');
    std::vector<long long> parts{nat()};
    while (eat(',')) parts.push_back(nat());
    expect(')');
    return parts;
  }

  ExprPtr primary() {
    if (eat('[')) {
      ExprPtr br = mk_expr(Expr::Kind::Bracket);
      br->kids.push_back(expr());
      expect(';');
      br->kids.push_back(expr());
      expect(']');
      return br;
    }
    std::string id = ident();
    if (id == "beta" && peek('(')) {
      expect('(');
      ExprPtr b = mk_expr(Expr::Kind::Beta);
      b->kids.push_back(expr());
      expect(',');
      b->comp = composition();
      expect(';');
      b->kids.push_back(expr());
      while (eat(',')) b->kids.push_back(expr());
      expect(')');
      if (b->comp.size() + 1 != b->kids.size()) err("argument count mismatch in beta");
      return b;
    }
    if (id == "X_" || (id.size() > 2 && id.rfind("X_", 0) == 0)) {
      ExprPtr g = mk_expr(Expr::Kind::Gen);
      g->num = id == "X_" ? nat() : std::stoll(id.substr(2));
      if (g->num < 1) err("generator arity must be positive");
      return g;
    }
    if (id == "gamma_" || (id.rfind("gamma_", 0) == 0 && id.size() > 6)) {
      ExprPtr g = mk_expr(Expr::Kind::Gamma);
      g->num = id == "gamma_" ? nat() : std::stoll(id.substr(6));
      expect('(');
      g->kids.push_back(expr());
      expect(')');
      return g;
    }
    if (id == "d") {
      ExprPtr d = mk_expr(Expr::Kind::DPow);
      d->num = eat('^') ? nat() : 1;
      return d;
    }
    ExprPtr v = mk_expr(Expr::Kind::Ident);
    v->name = id;
    return v;
  }
};

inline ExprPtr parse_expr(const std::string &text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// Text forms of the combinatorial types: "(3,2)" and "({1,3},{2})".
// ---------------------------------------------------------------------------
inline Composition parse_composition(const std::string &text) {
  size_t at = 0;
  auto skip = [&] { while (at < text.size() && std::isspace((unsigned char)text[at])) ++at; };
  auto expect = [&](char c) {
    skip();
    require(at < text.size() && text[at] == c, std::string("expected '") + c + "'");
    ++at;
  };
  auto nat = [&] {
    skip();
    require(at < text.size() && std::isdigit((unsigned char)text[at]), "expected a number");
    long long v = 0;
    while (at < text.size() && std::isdigit((unsigned char)text[at])) v = v * 10 + (text[at++] - '0');
    return v;
  };
  expect('(');
  std::vector<long long> parts{nat()};
  skip();
  while (at < text.size() && text[at] == ',') {
    ++at;
    parts.push_back(nat());
    skip();
  }
  expect(')');
  skip();
  require(at == text.size(), "trailing input");
  return Composition(parts);
}

inline SetPartition parse_partition(const std::string &text) {
  size_t at = 0;
  auto skip = [&] { while (at < text.size() && std::isspace((unsigned char)text[at])) ++at; };
  auto expect = [&](char c) {
    skip();
    require(at < text.size() && text[at] == c, std::string("expected '") + c + "'");
    ++at;
  };
  auto nat = [&] {
    skip();
    require(at < text.size() && std::isdigit((unsigned char)text[at]), "expected a number");
    long long v = 0;
    while (at < text.size() && std::isdigit((unsigned char)text[at])) v = v * 10 + (text[at++] - '0');
    return v;
  };
  std::vector<std::vector<long long>> blocks;
  long long n = 0;
  expect('(');
  do {
    expect('{');
    std::vector<long long> blk;
    skip();
    if (text[at] != '}') {
      blk.push_back(nat());
      skip();
      while (at < text.size() && text[at] == ',') {
        ++at;
        blk.push_back(nat());
        skip();
      }
    }
    expect('}');
    for (long long e : blk) n = std::max(n, e);
    blocks.push_back(std::move(blk));
    skip();
  } while (at < text.size() && text[at] == ',' && (++at, true));
  expect(')');
  skip();
  require(at == text.size(), "trailing input");
  return SetPartition(n, std::move(blocks));
}

} // namespace dpa

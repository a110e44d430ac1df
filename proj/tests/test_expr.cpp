#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpa/expr.hpp"

using namespace dpa;

static void roundtrip(const std::string &text) {
  ExprPtr e = parse_expr(text);
  std::string printed = expr_str(*e);
  ExprPtr e2 = parse_expr(printed);
  CHECK(*e == *e2);
  CHECK(expr_str(*e2) == printed);
}

TEST_CASE("expression shapes") {
  ExprPtr e = parse_expr("[a;b]*c + c*[a;b]");
  REQUIRE(e->kind == Expr::Kind::Sum);
  REQUIRE(e->kids.size() == 2);
  CHECK(e->kids[0]->kind == Expr::Kind::Product);
  CHECK(e->kids[0]->kids[0]->kind == Expr::Kind::Bracket);

  ExprPtr b = parse_expr("beta(X_3, (2,1); a, b)");
  REQUIRE(b->kind == Expr::Kind::Beta);
  CHECK(b->comp == std::vector<long long>{2, 1});
  REQUIRE(b->kids.size() == 3);
  CHECK(b->kids[0]->kind == Expr::Kind::Gen);
  CHECK(b->kids[0]->num == 3);

  ExprPtr n = parse_expr("[[a;b];b]");
  REQUIRE(n->kind == Expr::Kind::Bracket);
  CHECK(n->kids[0]->kind == Expr::Kind::Bracket);

  CHECK(parse_expr("d")->num == 1);
  CHECK(parse_expr("d^4")->num == 4);
  CHECK(parse_expr("gamma_3(a)")->num == 3);
  CHECK(parse_expr("2*a*b")->kind == Expr::Kind::Scaled);
}

TEST_CASE("parse then print is the identity") {
  for (const char *t :
       {"a", "[a;b]", "[a;b]*c + c*[a;b]", "beta(X_3, (2,1); a, b)", "[[a;b];b]",
        "gamma_2(a)*gamma_3([a;b])", "d^2", "beta(X_2, (1,1); gamma_2(a), d*b)",
        "3*[a;[b;c]] + 2*a*b*c", "beta(gamma_2(X_2), (2); a)",
        "beta(X_4, (1,1,2); a, [a;b], d^3)"})
    roundtrip(t);
}

TEST_CASE("whitespace insensitivity") {
  CHECK(*parse_expr(" [ a ; b ] * c ") == *parse_expr("[a;b]*c"));
  CHECK(*parse_expr("beta( X_3 , ( 2 , 1 ) ; a , b )") == *parse_expr("beta(X_3,(2,1);a,b)"));
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS(parse_expr("[a;b"));
  CHECK_THROWS(parse_expr("beta(X_2, (1); a, b)"));
  CHECK_THROWS(parse_expr("a +"));
  CHECK_THROWS(parse_expr("a b"));
}

TEST_CASE("combinatorial text forms") {
  CHECK(parse_composition("(3,2)") == Composition({3, 2}));
  CHECK(parse_composition("( 1 , 0 , 2 )") == Composition({1, 0, 2}));
  CHECK(parse_partition("({1,3},{2})") == SetPartition(3, {{1, 3}, {2}}));
  CHECK(parse_partition("({},{1,2})") == SetPartition(2, {{}, {1, 2}}));
  CHECK(parse_partition("({1,3},{2})").str() == "({1,3},{2})");
  CHECK(parse_composition("(3,2)").str() == "(3,2)");
  CHECK_THROWS(parse_partition("({1,3},{3})"));
}

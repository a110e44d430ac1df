#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpa/operads.hpp"

#include <random>

using namespace dpa;

static El lie(int chr, std::vector<long long> comb) { return mk_lie(chr, comb); }

TEST_CASE("lie normal form") {
  CHECK(lie(0, {2, 1}) == -Coeff::one(0) * lie(0, {1, 2}));
  // [x1;[x2;x3]] = [[x1;x2];x3] - [[x1;x3];x2]
  El lhs = lie_eval_comb(0, {El(0, unit_mon(Opid::Lie, 1)), lie(0, {2, 3})});
  CHECK(lhs == lie(0, {1, 2, 3}) - lie(0, {1, 3, 2}));
  // Jacobi sum normalizes to zero
  El j = lie_eval_comb(0, {El(0, unit_mon(Opid::Lie, 1)), lie(0, {2, 3})}) +
         lie_eval_comb(0, {El(0, unit_mon(Opid::Lie, 2)), lie(0, {3, 1})}) +
         lie_eval_comb(0, {El(0, unit_mon(Opid::Lie, 3)), lie(0, {1, 2})});
  CHECK(j.is_zero());
  // idempotent on normal forms
  for (auto &m : basis(Opid::Lie, 4)) CHECK(mk_lie(0, m.seq) == El(0, m));
}

TEST_CASE("basis dimensions") {
  CHECK(basis(Opid::Lie, 2).size() == 1);
  CHECK(basis(Opid::Lie, 4).size() == 6);
  CHECK(basis(Opid::Lie, 5).size() == 24);
  CHECK(basis(Opid::Com, 5).size() == 1);
  CHECK(basis(Opid::As, 3).size() == 6);
  CHECK(basis(Opid::Pois, 3).size() == 6); // dim Pois(n) = n!
  CHECK(basis(Opid::Pois, 4).size() == 24);
}

TEST_CASE("operad_compose basics") {
  El X2(0, mk_com({1, 2})), X3(0, mk_com({1, 2, 3}));
  CHECK(operad_compose(X2, 1, X2) == X3);
  CHECK(operad_compose(El(0, mk_d(1, 2)), 1, El(0, mk_d(1, 3))) == El(0, mk_d(1, 5)));
  CHECK(operad_compose(lie(0, {1, 2}), 1, lie(0, {1, 2})) == lie(0, {1, 2, 3}));
  // As: substitution splices sequences
  CHECK(operad_compose(El(0, mk_as({2, 1})), 1, El(0, mk_as({2, 1}))) == El(0, mk_as({3, 2, 1})));
}

TEST_CASE("units") {
  std::mt19937 rng(3);
  for (Opid op : {Opid::Com, Opid::Lie, Opid::As, Opid::Pois}) {
    for (auto &m : basis(op, 3)) {
      El x(0, m), e(0, unit_mon(op, 1));
      for (int i = 1; i <= 3; ++i) CHECK(operad_compose(x, i, e) == x);
      CHECK(operad_compose(e, 1, x) == x);
    }
  }
}

TEST_CASE("operad associativity samples") {
  std::mt19937 rng(17);
  for (Opid op : {Opid::Lie, Opid::As, Opid::Pois}) {
    auto b2 = basis(op, 2), b3 = basis(op, 3);
    for (int t = 0; t < 12; ++t) {
      El x(0, b3[rng() % b3.size()]), y(0, b2[rng() % b2.size()]), z(0, b2[rng() % b2.size()]);
      // sequential: (x o_2 y) o_4 z vs (x o_3 z') interleavings
      El a = operad_compose(operad_compose(x, 2, y), 1, z);
      El b = operad_compose(operad_compose(x, 1, z), 3, y);
      CHECK(a == b); // disjoint slots commute (after index shift)
      El c = operad_compose(operad_compose(x, 2, y), 2, z);
      El d = operad_compose(x, 2, operad_compose(y, 1, z));
      CHECK(c == d); // nested composition
    }
  }
}

TEST_CASE("composition is relabel-equivariant") {
  // relabel_f(x o_l y) = relabel_f(x) o_{f(l)} relabel_f(y) for injective f
  std::mt19937 rng(11);
  for (Opid op : {Opid::Lie, Opid::Pois, Opid::As}) {
    auto b3 = basis(op, 3), b2 = basis(op, 2);
    auto f = [](long long l) { return 7 - l; };
    for (int t = 0; t < 10; ++t) {
      El x(0, b3[rng() % b3.size()]);
      El y0(0, b2[rng() % b2.size()]);
      El y = relabel(y0, [](long long l) { return l + 3; }); // labels 4,5
      for (long long l = 1; l <= 3; ++l) {
        El lhs = relabel(compose_at(x, l, y), f);
        El rhs = compose_at(relabel(x, f), f(l), relabel(y, f));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("symmetric_action basics") {
  El X3(0, mk_com({1, 2, 3}));
  CHECK(symmetric_action(X3, Perm({2, 3, 1})) == X3);
  El b = lie(0, {1, 2});
  CHECK(symmetric_action(b, Perm({2, 1})) == -Coeff::one(0) * b);
  El L3 = frobenius_element(0, 3);
  CHECK(symmetric_action(L3, Perm({1, 3, 2})) == L3);
}

TEST_CASE("invariants_under") {
  CHECK(invariants_under(El(0, mk_com({1, 2, 3})), Composition{3}));
  CHECK(!invariants_under(lie(0, {1, 2}), Composition{2}));
  CHECK(invariants_under(lie(0, {1, 2}), Composition{1, 1}));
  for (int p : {2, 3}) CHECK(invariants_under(frobenius_element(p, p), Composition{p}));
}

TEST_CASE("frobenius_element") {
  CHECK(frobenius_element(0, 2) == lie(0, {1, 2}));
  CHECK(frobenius_element(0, 3) == lie(0, {1, 2, 3}) + lie(0, {1, 3, 2}));
  El L5 = frobenius_element(0, 5);
  int terms = 0;
  for (auto &[m, c] : L5.t) {
    (void)m;
    CHECK(c.rat() == 1);
    ++terms;
  }
  CHECK(terms == 24);
}

TEST_CASE("fixed_space_basis") {
  CHECK(fixed_space_basis(Opid::Com, 0, Composition{3}).size() == 1);
  CHECK(fixed_space_basis(Opid::Lie, 0, Composition{2}).empty());     // antisymmetry
  CHECK(fixed_space_basis(Opid::Lie, 0, Composition{1, 1}).size() == 1);
  for (auto &v : fixed_space_basis(Opid::Lie, 3, Composition{2, 1}))
    CHECK(invariants_under(v, Composition{2, 1}));
  // char 3: the fixed space Lie(3)^{S_3} contains L_3
  auto f3 = fixed_space_basis(Opid::Lie, 3, Composition{3});
  CHECK(!f3.empty());
  for (auto &v : f3) CHECK(invariants_under(v, Composition{3}));
  El L3 = frobenius_element(3, 3);
  Sifter<Mon> sf;
  for (auto &v : f3) sf.add(SVec<Mon>(v.t.begin(), v.t.end()));
  CHECK(sf.reduce(SVec<Mon>(L3.t.begin(), L3.t.end())).empty());
}

TEST_CASE("evaluate") {
  CHECK(evaluate(Opid::Lie, lie(0, {1, 2}), {"a", "a"}).is_zero());
  FreeEl ab = evaluate(Opid::Com, El(0, mk_com({1, 2})), {"a", "b"});
  CHECK(ab.str() == "a*b");
  FreeEl e = evaluate(Opid::Lie, frobenius_element(0, 3), {"x", "y", "x"});
  // [[x;y];x] + [[x;x];y] collapses to a single class
  FreeEl direct = evaluate(Opid::Lie, lie(0, {1, 2, 3}), {"x", "y", "x"}) +
                  evaluate(Opid::Lie, lie(0, {1, 3, 2}), {"x", "y", "x"});
  CHECK(e == direct);
  CHECK(!e.is_zero());
}

TEST_CASE("jacobson_s") {
  // p=2, i=1: [y;x]
  FreeEl s = jacobson_s(0, 1, 2);
  CHECK(s == evaluate(Opid::Lie, lie(0, {1, 2}), {"y", "x"}));
  // p=3, i=1: [y;[y;x]]
  El yyx = lie_eval_comb(0, {El(0, unit_mon(Opid::Lie, 1)), lie(0, {2, 3})});
  CHECK(jacobson_s(0, 1, 3) == evaluate(Opid::Lie, yyx, {"y", "y", "x"}));
  // p=3, i=2: [x;[y;x]]
  CHECK(jacobson_s(0, 2, 3) == evaluate(Opid::Lie, yyx, {"x", "y", "x"}) +
                                   evaluate(Opid::Lie, yyx, {"y", "x", "x"}));
}

TEST_CASE("pois structure") {
  // [a1*a2; a3] = a1*[a2;a3] + a2*[a1;a3]
  El prod = El(0, [] {
    Mon m;
    m.op = Opid::Pois;
    m.factors = {{1}, {2}};
    return m;
  }());
  El br = pois_bracket(0, prod.t.begin()->first, unit_mon(Opid::Pois, 3));
  El expect = mk_pois(0, {{1}, {2, 3}}) + mk_pois(0, {{2}, {1, 3}});
  CHECK(br == expect);
  // compose: (X2;1,1) o_1 [x1;x2] -> [x1;x2]*x3
  El X2p = mk_pois(0, {{1}, {2}});
  El lbr = mk_pois(0, {{1, 2}});
  CHECK(operad_compose(X2p, 1, lbr) == mk_pois(0, {{1, 2}, {3}}));
}

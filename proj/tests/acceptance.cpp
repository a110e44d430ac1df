// Acceptance gate: one line per criterion, exact equality throughout.
#include "dpa/frobenius.hpp"
#include "dpa/law.hpp"
#include "dpa/levp.hpp"

#include <iostream>

using namespace dpa;

namespace {

int failures = 0;

void line(int k, const std::string &what, bool ok) {
  std::cout << "criterion " << k << " (" << what << "): " << (ok ? "PASS" : "FAIL") << std::endl;
  if (!ok) ++failures;
}

bool guarded(const std::function<bool()> &f) {
  try {
    return f();
  } catch (const std::exception &e) {
    std::cerr << "  error: " << e.what() << "\n";
    return false;
  }
}

El com_el(int chr, int n) {
  std::vector<long long> l(n);
  std::iota(l.begin(), l.end(), 1);
  return El(chr, mk_com(l));
}

Perm cyc(long long n, std::vector<std::vector<long long>> cycles) {
  std::vector<long long> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (auto &c : cycles)
    for (size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()];
  return Perm(img);
}

// L3(u,v,w) t4 t5 t6 with L3 the symmetrized left comb
El l3_term(int chr, std::array<long long, 6> t) {
  return mk_pois(chr, {{t[0], t[1], t[2]}, {t[3]}, {t[4]}, {t[5]}}) +
         mk_pois(chr, {{t[0], t[2], t[1]}, {t[3]}, {t[4]}, {t[5]}});
}

El br2_term(int chr, std::array<long long, 6> t) {
  return mk_pois(chr, {{t[0], t[1]}, {t[2], t[3]}, {t[4]}, {t[5]}});
}

El sum_l3(int chr, const std::vector<std::array<long long, 6>> &ts) {
  El out(chr);
  for (auto &t : ts) out += l3_term(chr, t);
  return out;
}

El sum_br2(int chr, const std::vector<std::pair<int, std::array<long long, 6>>> &ts) {
  El out(chr);
  for (auto &[s, t] : ts) out += Coeff::integer(chr, s) * br2_term(chr, t);
  return out;
}

// the six groups of the hand rewriting of the cubed product
std::vector<El> l_groups(int chr) {
  El l1 = sum_l3(chr, {{2, 3, 5, 1, 4, 6}, {2, 4, 5, 1, 3, 6}, {2, 3, 6, 1, 4, 5}, {2, 4, 6, 1, 3, 5}});
  El l2 = sum_l3(chr, {{1, 3, 5, 2, 4, 6}, {1, 4, 5, 2, 3, 6}, {1, 3, 6, 2, 4, 5}, {1, 4, 6, 2, 3, 5}});
  El l3 = sum_br2(chr, {{1, {3, 2, 5, 4, 1, 6}},
                        {1, {5, 2, 3, 6, 1, 4}},
                        {1, {1, 6, 3, 2, 4, 5}},
                        {1, {1, 4, 5, 2, 3, 6}},
                        {1, {1, 4, 3, 6, 2, 5}},
                        {1, {1, 6, 5, 4, 2, 3}}});
  El l4 = sum_br2(chr, {{1, {3, 5, 2, 4, 1, 6}},
                        {1, {3, 5, 6, 2, 1, 4}},
                        {1, {1, 5, 4, 2, 3, 6}},
                        {1, {1, 3, 6, 2, 4, 5}},
                        {1, {1, 3, 4, 6, 2, 5}},
                        {1, {1, 5, 6, 4, 2, 3}}});
  El l5 = sum_br2(chr, {{1, {2, 3, 4, 6, 1, 5}},
                        {-1, {2, 5, 4, 6, 1, 3}},
                        {-1, {6, 3, 2, 4, 1, 5}},
                        {-1, {4, 5, 2, 6, 1, 3}},
                        {1, {6, 1, 2, 4, 3, 5}},
                        {1, {4, 1, 2, 6, 3, 5}}});
  El l6 = sum_br2(chr, {{-1, {1, 5, 2, 3, 4, 6}},
                        {-1, {1, 3, 2, 5, 4, 6}},
                        {1, {1, 3, 4, 5, 2, 6}},
                        {1, {1, 5, 6, 3, 2, 4}},
                        {-1, {3, 5, 4, 1, 2, 6}},
                        {1, {3, 5, 6, 1, 2, 4}}});
  return {l1, l2, l3, l4, l5, l6};
}

El raw_rewriting(int chr) {
  El L3 = frobenius_element(chr, 3);
  std::map<long long, Mon> amap = {{1, mk_com({1, 2})}, {2, mk_com({3, 4})}, {3, mk_com({5, 6})}};
  El lam(chr);
  for (auto &[xm, c] : L3.t) lam += c * law_apply(LawKind::Pois, chr, xm, amap);
  return lam;
}

const std::vector<std::array<long long, 6>> A1 = {
    {1, 2, 3, 4, 5, 6}, {1, 2, 5, 3, 4, 6}, {1, 3, 4, 2, 5, 6},
    {1, 3, 6, 2, 4, 5}, {1, 4, 5, 2, 3, 6}, {1, 5, 6, 2, 3, 4},
    {2, 3, 5, 1, 4, 6}, {3, 4, 5, 1, 2, 6}, {3, 5, 6, 1, 2, 4}};
const std::vector<std::array<long long, 6>> A2 = {
    {1, 2, 4, 3, 5, 6}, {1, 2, 6, 3, 4, 5}, {1, 4, 6, 2, 3, 5},
    {2, 3, 4, 1, 5, 6}, {2, 3, 6, 1, 4, 5}, {2, 4, 5, 1, 3, 6},
    {2, 5, 6, 1, 3, 4}, {3, 4, 6, 1, 2, 5}, {4, 5, 6, 1, 2, 3}};

std::vector<Perm> E_set() {
  return {cyc(6, {}),           cyc(6, {{1, 3}}),         cyc(6, {{3, 5}}),
          cyc(6, {{1, 3}, {2, 4, 6}}), cyc(6, {{1, 3, 5}}), cyc(6, {{2, 4, 6}})};
}

bool frobenius_decomposes(int p) {
  FrobeniusDecomposition d = frobenius_of_product(p);
  bool ok = d.complete();
  auto expected = expected_frobenius_cofactors(p);
  InvariantTensor sum(p);
  for (auto &[ij, g] : expected) {
    auto *c = d.at(ij.first, ij.second);
    if (!c) return false;
    InvariantTensor part = bare_product_trace(p, ij.first, ij.second, g);
    ok = ok && c->part == part;
    sum += part;
  }
  ok = ok && d.total == sum;
  for (auto ij : {std::pair<int, int>{0, 0}, {1, 0}, {0, 1}}) {
    auto *c = d.at(ij.first, ij.second);
    if (c) ok = ok && c->part.is_zero();
  }
  return ok && pois_compat(p).pass();
}

// criterion 4 helper: rewriting engine versus the categorical oracle
bool engine_matches_oracle(long long &instances) {
  const Word letters = {"a", "b", "c"};
  auto same = [&](LawKind law, int chr, const BetaTerm &s) {
    ++instances;
    return tilde_lambda(law, chr, s) == tilde_lambda_oracle(law, chr, s);
  };
  for (int chr : {0, 2, 3}) {
    for (LawKind law : {LawKind::Shift, LawKind::Der})
      for (Opid P : {Opid::Com, Opid::Lie})
        // higher d-powers compose from the generator (certified by ODL3), so
        // at the arity bound only the generator exponent is exercised
        for (long long e = 0; e <= 2; ++e)
          for (long long n = 1; n <= 6; ++n) {
            if (n == 6 && e != 1) continue;
            for (auto &q : positive_compositions(n)) {
              if (q.len() > 3) continue;
              Word w(q.len());
              for (int i = 0; i < q.len(); ++i) w[i] = letters[i % 3];
              for (auto &y : fixed_space_basis(P, chr, q)) {
                BetaTerm s(El(chr, mk_d(1, e)), Composition({1}),
                           std::vector<BetaTerm>{BetaTerm(y, q, w)});
                if (!same(law, chr, s)) return false;
              }
            }
          }
    for (long long osum = 1; osum <= 3; ++osum)
      for (auto &r : positive_compositions(osum)) {
        if (r.len() > 3) continue;
        for (auto &x : fixed_space_basis(Opid::Lie, chr, r)) {
          std::vector<Composition> qs(r.len(), Composition({1}));
          std::function<bool(int, long long)> rec = [&](int i, long long budget) {
            if (i == r.len()) {
              std::vector<BetaTerm> inner;
              int slot = 0;
              for (int j = 0; j < r.len(); ++j) {
                Word w(qs[j].len());
                for (int k = 0; k < qs[j].len(); ++k) w[k] = letters[slot++ % 3];
                inner.push_back(BetaTerm(com_el(chr, (int)qs[j].sum()), qs[j], w));
              }
              return same(LawKind::Pois, chr, BetaTerm(x, r, inner));
            }
            for (long long m = 1; r[i] * m <= budget; ++m)
              for (auto &q : positive_compositions(m)) {
                if (q.len() > 3) continue;
                qs[i] = q;
                if (!rec(i + 1, budget - r[i] * m)) return false;
              }
            return true;
          };
          if (!rec(0, 6)) return false;
        }
      }
  }
  return true;
}

} // namespace

int main() {
  line(1, "cubed product in characteristic 3", guarded([] {
         Stopwatch sw;
         bool ok = frobenius_decomposes(3);
         return ok && sw.ms() < 10000;
       }));

  line(2, "squared product in characteristic 2", guarded([] {
         Stopwatch sw;
         bool ok = frobenius_decomposes(2);
         return ok && sw.ms() < 1000;
       }));

  line(3, "hand rewriting intermediates", guarded([] {
         int chr = 3;
         auto ls = l_groups(chr);
         El total(chr);
         for (auto &l : ls) total += l;
         bool ok = total == raw_rewriting(chr);

         auto E = E_set();
         ok = ok && E.size() == 6;
         std::vector<Composition> qs = {Composition({1, 1})};
         auto H = wreath_subgroup(Composition({3}), qs);
         std::set<Perm> Hset(H.begin(), H.end());
         for (size_t i = 0; i < E.size(); ++i)
           for (size_t j = i + 1; j < E.size(); ++j)
             ok = ok && !Hset.count(E[i].inverse() * E[j]);
         for (auto &tau : wreath_cosets(Composition({3}), qs)) {
           int hits = 0;
           for (auto &e : E)
             if (Hset.count(e.inverse() * tau)) ++hits;
           ok = ok && hits == 1;
         }

         auto esum = [&](const El &l) {
           El out(chr);
           for (auto &s : E) out += act_left(s, l);
           return out;
         };
         ok = ok && esum(ls[3]).is_zero() && esum(ls[4]).is_zero() && esum(ls[5]).is_zero();
         ok = ok && A1.size() == 9 && A2.size() == 9;
         El rhs(chr);
         for (auto &t : A1) rhs += Coeff::integer(chr, -1) * l3_term(chr, t);
         for (auto &t : A2) rhs += Coeff::integer(chr, -1) * l3_term(chr, t);
         ok = ok && esum(ls[0]) + esum(ls[1]) == rhs;

         PartitionBeta w = tilde_lambda_merged(LawKind::Pois, chr, frobenius_product_term(chr));
         return ok && w.W == esum(total);
       }));

  line(4, "rewriting engine equals the diagram oracle", guarded([] {
         long long instances = 0;
         bool ok = engine_matches_oracle(instances);
         return ok && instances > 0;
       }));

  line(5, "divided power relation suite", guarded([] {
         Stopwatch sw;
         bool ok = true;
         for (int chr : {0, 2, 3}) {
           ok = ok && verify_beta_relations(Opid::Com, chr, 5).pass();
           ok = ok && verify_beta_relations(Opid::Lie, chr, 4).pass();
         }
         return ok && sw.ms() < 60000;
       }));

  line(6, "derivation power rule and part splitting", guarded([] {
         bool ok = true;
         for (int chr : {0, 2, 3}) {
           Report com = check_derivation(Opid::Com, chr, 5);
           ok = ok && com.pass();
           for (auto &c : com.checks)
             if (c.diagram == "power rule") ok = ok && c.instances >= 4;
           ok = ok && check_derivation(Opid::Lie, chr, 5).pass();
         }
         return ok;
       }));

  line(7, "endomorphism compatibility", guarded([] {
         bool ok = true;
         for (int chr : {0, 2, 3})
           for (Opid P : {Opid::Com, Opid::Lie}) ok = ok && check_shift(P, chr, 5).pass();
         return ok;
       }));

  line(8, "distributive law diagrams and the convolution identity", guarded([] {
         bool ok = true;
         for (int chr : {0, 2, 3}) {
           for (Opid P : {Opid::Com, Opid::Lie}) {
             ok = ok && check_odl(LawKind::Shift, P, chr, 4).pass();
             ok = ok && check_odl(LawKind::Der, P, chr, 4).pass();
           }
           ok = ok && check_odl(LawKind::Pois, Opid::Com, chr, 4).pass();
         }
         for (long long j = 0; j <= 8; ++j)
           for (long long k = 0; j + k <= 8; ++k)
             for (int m = 1; m <= 4; ++m) ok = ok && vandermonde_check(j, k, m);
         return ok;
       }));

  line(9, "level algebra divided powers", guarded([] {
         return levp_verify(2, 4).pass() && levp_verify(3, 9).pass();
       }));

  line(10, "worked partition calculus examples", guarded([] {
         bool ok = gamma_k(SetPartition(3, {{1, 3}, {2}}), 3) ==
                   SetPartition(9, {{1, 3, 4, 6, 7, 9}, {2, 5, 8}});
         ok = ok && diamond(Composition({3, 2}),
                            {iota(Composition({2, 1})), iota(Composition({1, 2}))}) ==
                        SetPartition(15, {{1, 2, 4, 5, 7, 8}, {3, 6, 9}, {10, 13}, {11, 12, 14, 15}});
         return ok;
       }));

  return failures == 0 ? 0 : 1;
}

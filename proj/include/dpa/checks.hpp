#pragma once
#include "dpa/gamma.hpp"
#include "dpa/operads.hpp"
#include "dpa/report.hpp"

namespace dpa {

inline std::vector<Composition> positive_compositions(long long n) {
  std::vector<Composition> out;
  for (int m = 1; m <= n; ++m)
    for (auto &c : compositions_of(n, m)) {
      bool pos = true;
      for (long long v : c) pos &= v > 0;
      if (pos) out.push_back(Composition(c));
    }
  return out;
}

// trace expansion of a free-algebra element: each component becomes the
// all-ones beta term on its word (well defined on the canonical reduction)
inline InvariantTensor free_el_tensor(int chr, const FreeEl &f) {
  InvariantTensor out(chr);
  for (auto &[w, e] : f.comp)
    out += beta_expand(chr, e, Composition(std::vector<long long>(w.size(), 1)), w);
  return out;
}

namespace detail {
inline void record(Check &ck, const InvariantTensor &lhs, const InvariantTensor &rhs,
                   const std::string &input) {
  ++ck.instances;
  if (!(lhs == rhs)) ck.failures.push_back({input, lhs.str(), rhs.str()});
}
} // namespace detail

// ---------------------------------------------------------------------------
// Relation suite for the divided power operations of a single operad, checked
// in the tensor model: argument permutation, zero parts, scalars, repeats,
// additivity, linearity, unit, and composition of nested operations. For Com
// in prime characteristic the divided p-th power relations are named checks;
// for Lie, the p-th power operation relations.
// ---------------------------------------------------------------------------
inline Report verify_beta_relations(Opid P, int chr, int max_n) {
  Stopwatch sw;
  Report rep{opid_str(P) + " divided power relations", chr, 0, {}};
  const Word letters = {"a", "b", "c"};
  auto letter = [&](long long i) { return letters[i % 3]; };

  Check c1{"beta1", "argument permutation", max_n, 0, {}};
  Check c2{"beta2", "zero part insertion", max_n, 0, {}};
  Check c3{"beta3", "scalar argument", max_n, 0, {}};
  Check c4{"beta4", "repeated arguments", max_n, 0, {}};
  Check c5{"beta5", "argument additivity", max_n, 0, {}};
  Check c6{"beta6", "linearity in the element", max_n, 0, {}};
  Check c7a{"beta7a", "unit", 1, 0, {}};
  Check c7b{"beta7b", "composition", max_n, 0, {}};

  for (long long n = 1; n <= max_n; ++n)
    for (auto &r : positive_compositions(n)) {
      std::vector<El> fsb = fixed_space_basis(P, chr, r);
      int p = r.len();
      Word args(p);
      for (int i = 0; i < p; ++i) args[i] = letter(i);
      for (auto &x : fsb) {
        std::string tag = BetaTerm(x, r, args).str();
        InvariantTensor base = beta_expand(chr, x, r, args);
        // permuting the arguments and the element together is invisible
        for (int k = 1; k < p; ++k) {
          Perm rho = Perm::transposition(p, k, k + 1);
          El xs = act_left(block_permutation(rho, r), x);
          std::vector<long long> rp(p);
          Word ap(p);
          for (int i = 0; i < p; ++i) {
            rp[rho(i + 1) - 1] = r[i];
            ap[rho(i + 1) - 1] = args[i];
          }
          detail::record(c1, base, beta_expand(chr, xs, Composition(rp), ap), tag);
        }
        // a zero part carries no tensor positions
        for (int k = 0; k <= p; ++k) {
          std::vector<long long> rz(r.parts);
          Word az(args);
          rz.insert(rz.begin() + k, 0);
          az.insert(az.begin() + k, "z");
          detail::record(c2, base, beta_expand(chr, x, Composition(rz), az), tag);
        }
        // a scalar on slot 1 comes out raised to the part
        for (long long lam : {2, 5}) {
          std::vector<LetterSum> ls = letter_args(chr, args);
          ls[0] = {{args[0], Coeff::integer(chr, lam)}};
          detail::record(c3, beta_expand(chr, x, r, ls),
                         Coeff::integer(chr, lam).pow(r[0]) * base, tag);
        }
        // repeated letters: plain and grouped expansion agree
        for (int stride : {1, 2}) {
          Word w(p);
          for (int i = 0; i < p; ++i) w[i] = letter(i % stride);
          detail::record(c4, beta_expand(chr, x, r, w), beta_expand_grouped(chr, x, r, w), tag);
        }
        {
          ReductionCheck rc = repeated_args_reduction(chr, x, r, args);
          detail::record(c4, rc.lhs, rc.rhs, tag);
        }
        // a sum in slot 1 splits the first part
        {
          std::vector<LetterSum> ls = letter_args(chr, args);
          ls[0] = {{"u", Coeff::one(chr)}, {"v", Coeff::one(chr)}};
          InvariantTensor rhs(chr);
          for (long long l = 0; l <= r[0]; ++l) {
            Word w = {"u", "v"};
            w.insert(w.end(), args.begin() + 1, args.end());
            rhs += beta_expand(chr, x, compose_composition(r, 1, Composition({l, r[0] - l})), w);
          }
          detail::record(c5, beta_expand(chr, x, r, ls), rhs, tag);
        }
        detail::record(c6, beta_expand(chr, Coeff::integer(chr, 3) * x, r, args),
                       Coeff::integer(chr, 3) * base, tag);
      }
      for (size_t j = 0; j + 1 < fsb.size(); ++j)
        detail::record(c6, beta_expand(chr, fsb[j] + fsb[j + 1], r, args),
                       beta_expand(chr, fsb[j], r, args) + beta_expand(chr, fsb[j + 1], r, args),
                       r.str());
    }

  // unit
  {
    El u(chr, unit_mon(P, 1));
    InvariantTensor one(chr);
    one.add({unit_mon(P, 1), {"a"}}, Coeff::one(chr));
    detail::record(c7a, beta_expand(chr, trace_map(u, {"a"})), one, "unit");
  }

  // composition of nested operations: the merged value against the slow coset
  // enumeration, the characteristic-zero evaluator, and the integral reduction
  {
    long long cap = std::min<long long>(max_n, 5);
    long long lg = 0; // rotating letter assignment across inner slots
    for (long long nout = 1; nout <= 2 && nout <= cap; ++nout)
      for (auto &r : positive_compositions(nout)) {
        int p = r.len();
        std::vector<std::vector<Composition>> pools(p);
        for (int i = 0; i < p; ++i)
          for (long long m = 1; m * r[i] <= cap; ++m)
            for (auto &q : positive_compositions(m)) pools[i].push_back(q);
        std::vector<size_t> qi(p, 0);
        std::function<void(int, long long)> walk = [&](int i, long long tot) {
          if (i == p) {
            std::vector<El> xs = fixed_space_basis(P, chr, r);
            std::vector<std::vector<El>> ys(p);
            for (int k = 0; k < p; ++k) {
              ys[k] = fixed_space_basis(P, chr, pools[k][qi[k]]);
              if (ys[k].empty()) return;
            }
            std::vector<size_t> yi(p, 0);
            for (auto &x : xs)
              while (true) {
                std::vector<BetaTerm> inner;
                for (int k = 0; k < p; ++k) {
                  const Composition &q = pools[k][qi[k]];
                  Word w(q.len());
                  for (int j = 0; j < q.len(); ++j) w[j] = letter(lg++);
                  inner.push_back(BetaTerm(ys[k][yi[k]], q, w));
                }
                BetaTerm s(x, r, inner);
                InvariantTensor T = gamma_monad_tensor(s);
                detail::record(c7b, T, merge_nested(x, r, inner, true).expand(), s.str());
                detail::record(c7b, T, beta_expand(chr, gamma_monad_mult(s)), s.str());
                if (chr == 0) {
                  detail::record(c7b, T, nested_value0(s), s.str());
                } else {
                  // elements invariant only mod p have no characteristic-zero
                  // counterpart; reduction is checked on the ones that lift
                  bool liftable = invariants_under(el_to_char(0, x), r);
                  for (auto &t : inner) liftable &= invariants_under(el_to_char(0, t.x), t.r);
                  if (liftable) {
                    BetaTerm s0 = term_to_char(0, s);
                    InvariantTensor T0 = gamma_monad_tensor(s0);
                    detail::record(c7b, T, tensor_to_char(chr, T0), s.str());
                    detail::record(c7b, T0, nested_value0(s0), s.str());
                  }
                }
                int k = 0;
                while (k < p && ++yi[k] == ys[k].size()) yi[k++] = 0;
                if (k == p) break;
              }
            return;
          }
          for (qi[i] = 0; qi[i] < pools[i].size(); ++qi[i]) {
            long long t2 = tot + r[i] * pools[i][qi[i]].sum();
            if (t2 <= cap) walk(i + 1, t2);
          }
        };
        bool any = true;
        for (auto &pl : pools) any &= !pl.empty();
        if (any) walk(0, 0);
      }
  }

  rep.checks = {c1, c2, c3, c4, c5, c6, c7a, c7b};

  // divided p-th power relations of the product, for Com in characteristic p
  if (P == Opid::Com && chr > 0 && chr <= max_n) {
    int p = chr;
    std::vector<long long> labs(p);
    std::iota(labs.begin(), labs.end(), 1);
    El Xp(chr, mk_com(labs));
    Composition rp({(long long)p});
    InvariantTensor zero(chr);
    Check cp1{"Cp1", "p-th power of a scalar", p, 0, {}};
    for (long long lam : {2, 5})
      detail::record(cp1,
                     beta_expand(chr, Xp, rp, {{{"a", Coeff::integer(chr, lam)}}}),
                     Coeff::integer(chr, lam).pow(p) * beta_expand(chr, Xp, rp, Word{"a"}),
                     "lambda=" + std::to_string(lam));
    Check cp2{"Cp2", "vanishing p-th product power", p, 0, {}};
    detail::record(cp2,
                   beta_expand(chr, Xp, Composition(std::vector<long long>(p, 1)), Word(p, "a")),
                   zero, "a^p");
    Check cp3{"Cp3", "p-th power of a sum", p, 0, {}};
    {
      InvariantTensor rhs = beta_expand(chr, Xp, rp, Word{"a"}) +
                            beta_expand(chr, Xp, rp, Word{"b"});
      for (long long i = 1; i < p; ++i)
        rhs += beta_expand(chr, Xp, Composition({i, p - i}), Word{"a", "b"});
      detail::record(cp3,
                     beta_expand(chr, Xp, rp, {{{"a", Coeff::one(chr)}, {"b", Coeff::one(chr)}}}),
                     rhs, "gamma_p(a+b)");
    }
    Check cp4{"Cp4", "p-th power of a product", p, 0, {}};
    {
      El X2(chr, mk_com({1, 2}));
      BetaTerm prod(X2, Composition({1, 1}), Word{"a", "b"});
      BetaTerm s(Xp, rp, std::vector<BetaTerm>{prod});
      detail::record(cp4, gamma_monad_tensor(s), zero, s.str());
    }
    rep.checks.insert(rep.checks.end(), {cp1, cp2, cp3, cp4});
  }

  // p-th power operation relations, for Lie in characteristic p
  if (P == Opid::Lie && chr > 0 && chr <= max_n) {
    int p = chr;
    El Lp = frobenius_element(chr, p);
    Composition rp({(long long)p});
    Check l2{"L2", "p-th power of a scalar", p, 0, {}};
    for (long long lam : {2, 5})
      detail::record(l2,
                     beta_expand(chr, Lp, rp, {{{"x", Coeff::integer(chr, lam)}}}),
                     Coeff::integer(chr, lam).pow(p) * beta_expand(chr, Lp, rp, Word{"x"}),
                     "lambda=" + std::to_string(lam));
    Check l3{"L3", "p-th power of a sum", p, 0, {}};
    {
      InvariantTensor rhs = beta_expand(chr, Lp, rp, Word{"x"}) +
                            beta_expand(chr, Lp, rp, Word{"y"});
      for (long long i = 1; i < p; ++i)
        rhs += Coeff::integer(chr, i).inv() * free_el_tensor(chr, jacobson_s(chr, (int)i, p));
      detail::record(l3,
                     beta_expand(chr, Lp, rp, {{{"x", Coeff::one(chr)}, {"y", Coeff::one(chr)}}}),
                     rhs, "F(x+y)");
    }
    rep.checks.insert(rep.checks.end(), {l2, l3});
  }

  rep.wall_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// The endomorphism operad: applying the arity-one generator to any divided
// power operation wraps every argument position once.
// ---------------------------------------------------------------------------
inline Report check_shift(Opid P, int chr, int max_n) {
  Stopwatch sw;
  Report rep{"endomorphism compatibility over " + opid_str(P), chr, 0, {}};
  Check ck{"shift", "d of a divided power", max_n, 0, {}};
  Opid pop = product_op(LawKind::Shift, P);
  const Word letters = {"a", "b", "c"};
  El d1(chr, mk_d(1, 1));
  for (long long n = 1; n <= max_n; ++n)
    for (auto &r : positive_compositions(n))
      for (auto &x : fixed_space_basis(P, chr, r)) {
        Word args(r.len());
        for (int i = 0; i < r.len(); ++i) args[i] = letters[i % 3];
        BetaTerm inner(x, r, args);
        BetaTerm s(d1, Composition({1}), std::vector<BetaTerm>{inner});
        El xh = el_map(x, [&](const Mon &m) {
          std::map<long long, long long> e;
          for (long long l : m.labels()) e[l] = 1;
          return El(chr, mk_pd(pop, m, e));
        });
        detail::record(ck, tilde_lambda(LawKind::Shift, chr, s),
                       beta_expand_grouped(chr, xh, r, args), s.str());
      }
  rep.checks = {ck};
  rep.wall_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// The derivation operad: applying the arity-one generator to a divided power
// operation splits off one copy from each part in turn, the split copy
// carrying the generator.
// ---------------------------------------------------------------------------
inline Report check_derivation(Opid P, int chr, int max_n) {
  Stopwatch sw;
  Report rep{"derivation compatibility over " + opid_str(P), chr, 0, {}};
  Check power{"derivation", "power rule", max_n, 0, {}};
  Check general{"derivation", "part splitting sum", max_n, 0, {}};
  Opid pop = product_op(LawKind::Der, P);
  const Word letters = {"a", "b", "c"};
  El d1(chr, mk_d(1, 1));
  auto lift_at = [&](const El &x, long long lab) {
    return el_map(x, [&](const Mon &m) { return El(chr, mk_pd(pop, m, {{lab, 1}})); });
  };
  for (long long n = 1; n <= max_n; ++n)
    for (auto &r : positive_compositions(n))
      for (auto &x : fixed_space_basis(P, chr, r)) {
        int p = r.len();
        Word args(p);
        for (int i = 0; i < p; ++i) args[i] = letters[i % 3];
        BetaTerm s(d1, Composition({1}), std::vector<BetaTerm>{BetaTerm(x, r, args)});
        InvariantTensor rhs(chr);
        long long at = 0;
        for (int i = 0; i < p; ++i) {
          at += r[i];
          El xi = lift_at(x, at); // the last label of part i carries d
          if (r[i] == 1) {
            rhs += beta_expand_grouped(chr, xi, r, args);
          } else {
            Composition r2 = compose_composition(r, i + 1, Composition({r[i] - 1, 1}));
            Word a2 = args;
            a2.insert(a2.begin() + i + 1, args[i]);
            rhs += beta_expand_grouped(chr, xi, r2, a2);
          }
        }
        detail::record(general, tilde_lambda(LawKind::Der, chr, s), rhs, s.str());
        if (P == Opid::Com && r.len() == 1 && r[0] >= 2) {
          // d(gamma_n(a)) = gamma_{n-1}(a) * d(a)
          detail::record(power, tilde_lambda(LawKind::Der, chr, s),
                         beta_expand_grouped(chr, lift_at(x, n), Composition({n - 1, 1}),
                                             Word{args[0], args[0]}),
                         s.str());
        }
      }
  rep.checks = {general};
  if (P == Opid::Com) rep.checks.push_back(power);
  rep.wall_ms = sw.ms();
  return rep;
}

} // namespace dpa

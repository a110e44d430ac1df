#pragma once
#include "dpa/checks.hpp"

namespace dpa {

// base-p expansion r = sum digit_k p^{expo_k} with digits in [1,p-1] and
// strictly increasing exponents
struct PAdicExpansion {
  int p = 0;
  std::vector<std::pair<long long, long long>> terms; // (digit, exponent)

  static PAdicExpansion of(long long r, int p) {
    require(r >= 1 && p >= 2, "positive value and base expected");
    PAdicExpansion out{p, {}};
    for (long long e = 0; r > 0; ++e, r /= p)
      if (r % p) out.terms.push_back({r % p, e});
    return out;
  }
  long long value() const {
    long long v = 0;
    for (auto &[d, e] : terms) {
      long long q = 1;
      for (long long k = 0; k < e; ++k) q *= p;
      v += d * q;
    }
    return v;
  }
};

// the symmetric n-ary product with a chosen endomorphism exponent per slot
inline El levp_element(int chr, const std::vector<long long> &exps) {
  std::vector<long long> labs(exps.size());
  std::iota(labs.begin(), labs.end(), 1);
  std::map<long long, long long> e;
  for (size_t i = 0; i < exps.size(); ++i) e[labs[i]] = exps[i];
  return El(chr, mk_pd(Opid::ShiftCom, mk_com(labs), e));
}

// the p-ary level multiplication, with every slot shifted once
inline El levp_star(int p) { return levp_element(p, std::vector<long long>(p, 1)); }

// exponent reciprocals sum to one: sum of p^{-i_j} over the labels equals 1
inline bool levp_condition(int p, const Mon &m) {
  long long M = 0;
  for (auto &[l, e] : m.dexp) M = std::max(M, e);
  long long scale = 1;
  for (long long k = 0; k < M; ++k) scale *= p;
  long long total = 0;
  for (auto &[l, e] : m.dexp) {
    long long q = scale;
    for (long long k = 0; k < e; ++k) q /= p;
    total += q;
  }
  return total == scale;
}

// all nondecreasing exponent tuples with reciprocal sum one and at most
// max_size entries
inline std::vector<std::vector<long long>> levp_condition_multisets(int p, int max_size) {
  std::vector<std::vector<long long>> out;
  long long scale = 1;
  for (int k = 0; k < max_size; ++k) scale *= p;
  std::vector<long long> cur;
  std::function<void(long long, long long)> rec = [&](long long min_e, long long remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if ((long long)cur.size() == max_size) return;
    for (long long e = min_e; e <= max_size; ++e) {
      long long q = scale;
      for (long long k = 0; k < e; ++k) q /= p;
      if (q == 0 || q > remaining) continue;
      cur.push_back(e);
      rec(e, remaining - q);
      cur.pop_back();
    }
  };
  rec(0, scale);
  return out;
}

namespace detail {
inline std::string exps_str(const std::vector<long long> &es) {
  std::string s = "(";
  for (size_t i = 0; i < es.size(); ++i) s += (i ? "," : "") + std::to_string(es[i]);
  return s + ")";
}
} // namespace detail

// ---------------------------------------------------------------------------
// Verification of the level-algebra divided power structure inside the
// shifted product operad: the four relations of the p-th star power, the
// reciprocal-sum filter closed under composition and exhausted by splitting
// the star generator, and the regrouping of a generic divided power into
// star powers and shifts along the base-p digits of each part.
// ---------------------------------------------------------------------------
inline Report levp_verify(int p, int max_size) {
  Stopwatch sw;
  int chr = p;
  Report rep{"p-level divided power relations", chr, 0, {}};
  El Sp = levp_star(p);
  Composition rp({(long long)p});
  Composition ones(std::vector<long long>((size_t)p, 1));
  InvariantTensor zero(chr);

  Check lv1{"Lev1", "p-th star power of a scalar", p, 0, {}};
  for (long long lam : {2, 5})
    detail::record(lv1, beta_expand(chr, Sp, rp, {{{"a", Coeff::integer(chr, lam)}}}),
                   Coeff::integer(chr, lam).pow(p) * beta_expand(chr, Sp, rp, Word{"a"}),
                   "lambda=" + std::to_string(lam));

  Check lv2{"Lev2", "vanishing star of a repeated argument", p, 0, {}};
  detail::record(lv2, beta_expand(chr, Sp, ones, Word((size_t)p, "a")), zero, "star(a,...,a)");

  Check lv3{"Lev3", "p-th star power of a sum", p, 0, {}};
  {
    InvariantTensor rhs =
        beta_expand(chr, Sp, rp, Word{"a"}) + beta_expand(chr, Sp, rp, Word{"b"});
    for (long long i = 1; i < p; ++i) {
      Word w((size_t)i, "a");
      w.insert(w.end(), (size_t)(p - i), "b");
      rhs += divided_coefficient(chr, {i, p - i}) * beta_expand(chr, Sp, ones, w);
    }
    detail::record(lv3,
                   beta_expand(chr, Sp, rp, {{{"a", Coeff::one(chr)}, {"b", Coeff::one(chr)}}}),
                   rhs, "phi(a+b)");
  }

  Check lv4{"Lev4", "p-th star power of a star product", p, 0, {}};
  {
    Word w((size_t)p);
    for (int i = 0; i < p; ++i) w[i] = "a" + std::to_string(i + 1);
    BetaTerm s(Sp, rp, std::vector<BetaTerm>{BetaTerm(Sp, ones, w)});
    detail::record(lv4, gamma_monad_tensor(s), zero, s.str());
  }

  // composing condition monomials stays in the span of condition monomials,
  // and splitting slots of the star generator reaches every one of them
  Check flt{"filter", "reciprocal-sum condition", max_size, 0, {}};
  {
    auto all = levp_condition_multisets(p, max_size);
    std::set<std::vector<long long>> target(all.begin(), all.end());
    std::set<std::vector<long long>> reached = {{0}};
    std::vector<std::vector<long long>> frontier = {{0}};
    while (!frontier.empty()) {
      std::vector<std::vector<long long>> next;
      for (auto &es : frontier) {
        std::set<long long> distinct(es.begin(), es.end());
        for (long long at : distinct) {
          if ((long long)es.size() + p - 1 > max_size) continue;
          El x = levp_element(chr, es);
          // disjoint labels for the inserted generator copy
          std::vector<long long> glabs(p);
          std::iota(glabs.begin(), glabs.end(), (long long)es.size() + 1);
          std::map<long long, long long> ge;
          for (long long l : glabs) ge[l] = 1;
          El g(chr, mk_pd(Opid::ShiftCom, mk_com(glabs), ge));
          long long slot = std::find(es.begin(), es.end(), at) - es.begin() + 1;
          El comp = compose_at(x, slot, g);
          ++flt.instances;
          require(comp.t.size() == 1, "composite is not a monomial");
          const Mon &cm = comp.t.begin()->first;
          if (!levp_condition(p, cm))
            flt.failures.push_back({detail::exps_str(es) + " split at " + std::to_string(at),
                                    cm.str(), "condition"});
          std::vector<long long> ces;
          for (auto &[l, e] : cm.dexp) ces.push_back(e);
          std::sort(ces.begin(), ces.end());
          if (reached.insert(ces).second) next.push_back(ces);
        }
      }
      frontier = std::move(next);
    }
    ++flt.instances;
    if (reached != target) {
      std::string missing;
      for (auto &es : target)
        if (!reached.count(es)) missing += detail::exps_str(es) + " ";
      std::string extra;
      for (auto &es : reached)
        if (!target.count(es)) extra += detail::exps_str(es) + " ";
      flt.failures.push_back({"reachability", "missing: " + missing, "extra: " + extra});
    }
  }

  // beta_{X_n,r}(d^{i_1}v_1,...) with sum r_j p^{-i_j} = 1 regroups into star
  // powers of shifted arguments, one slot per base-p digit of each part
  Check fac{"factorization", "base-p regrouping of a divided power", max_size, 0, {}};
  {
    // iterated p-th star powers of a single letter, as canonical terms
    std::map<std::pair<long long, std::string>, BetaTerm> phi_pow;
    auto phi_iter = [&](long long e, const std::string &v) -> const BetaTerm & {
      auto key = std::make_pair(e, v);
      auto it = phi_pow.find(key);
      if (it != phi_pow.end()) return it->second;
      BetaTerm t(El(chr, unit_mon(Opid::ShiftCom, 1)), Composition({1}), Word{v});
      for (long long k = 0; k < e; ++k) {
        BetaExpression b =
            tensor_to_beta(merge_nested(Sp, rp, std::vector<BetaTerm>{t}).expand());
        require(b.size() == 1, "iterated star power is not a single term");
        t = b[0];
      }
      return phi_pow.emplace(key, std::move(t)).first->second;
    };
    const Word letters = {"a", "b", "c", "u", "v", "w", "x", "y", "z"};
    for (auto &es : levp_condition_multisets(p, max_size)) {
      // one slot per distinct exponent, part = multiplicity
      std::vector<long long> rparts, iexps;
      for (long long e : es)
        if (!iexps.empty() && iexps.back() == e) {
          ++rparts.back();
        } else {
          rparts.push_back(1);
          iexps.push_back(e);
        }
      int s = (int)rparts.size();
      require(s <= (int)letters.size(), "not enough letters");
      std::vector<long long> flat;
      for (int j = 0; j < s; ++j)
        for (long long k = 0; k < rparts[j]; ++k) flat.push_back(iexps[j]);
      Word args(letters.begin(), letters.begin() + s);
      InvariantTensor lhs =
          beta_expand_grouped(chr, levp_element(chr, flat), Composition(rparts), args);

      std::vector<BetaTerm> inner;
      std::map<long long, long long> outer_exps;
      Coeff coef = Coeff::one(chr);
      long long lab = 0;
      for (int j = 0; j < s; ++j)
        for (auto &[digit, e] : PAdicExpansion::of(rparts[j], p).terms) {
          require(iexps[j] >= e, "digit exponent exceeds the slot shift");
          coef = coef * divided_coefficient(chr, {digit});
          for (long long l = 0; l < digit; ++l) {
            ++lab;
            outer_exps[lab] = iexps[j] - e;
            inner.push_back(phi_iter(e, args[j]));
          }
        }
      std::vector<long long> olabs(lab);
      std::iota(olabs.begin(), olabs.end(), 1);
      El xo(chr, mk_pd(Opid::ShiftCom, mk_com(olabs), outer_exps));
      InvariantTensor rhs =
          coef *
          merge_nested(xo, Composition(std::vector<long long>((size_t)lab, 1)), inner).expand();
      detail::record(fac, lhs, rhs, detail::exps_str(es));
    }
  }

  rep.checks = {lv1, lv2, lv3, lv4, flt, fac};
  rep.wall_ms = sw.ms();
  return rep;
}

} // namespace dpa

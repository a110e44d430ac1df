#pragma once
#include "dpa/law.hpp"
#include "dpa/tensor.hpp"

namespace dpa {

// ---------------------------------------------------------------------------
// Lifts into a product operad P.Q: unit insertions on the missing side.
// Composites of lifted elements never invoke the rewriting law (the host
// exponent is 0, resp. the host factor is a singleton).
// ---------------------------------------------------------------------------
inline El lift_top(Opid pop, const El &y) {
  return el_map(y, [&](const Mon &m) {
    require(m.op == top_of(pop), "monomial is not over the top operad");
    if (pop == Opid::Pois) {
      Mon mm;
      mm.op = Opid::Pois;
      for (long long l : m.seq) mm.factors.push_back({l});
      return El(y.chr, mm);
    }
    if (m.op == Opid::Com) return El(y.chr, mk_pd(pop, m, {}));
    Mon mm = m;
    mm.op = pop;
    for (long long l : m.labels()) mm.dexp.push_back({l, 0});
    return El(y.chr, mm);
  });
}

inline El lift_bottom(Opid pop, const El &x) {
  return el_map(x, [&](const Mon &m) {
    require(m.op == bottom_of(pop), "monomial is not over the bottom operad");
    if (pop == Opid::Pois) {
      Mon mm;
      mm.op = Opid::Pois;
      mm.factors = {m.seq};
      return El(x.chr, mm);
    }
    auto [l, e] = m.dexp[0];
    return El(x.chr, mk_pd(pop, unit_mon(top_of(pop), l), {{l, e}}));
  });
}

// ---------------------------------------------------------------------------
// Partition-indexed beta term: W invariant under the Young subgroup of R,
// one argument letter per block.
// ---------------------------------------------------------------------------
struct PartitionBeta {
  int chr = 0;
  El W;
  SetPartition R;
  Word args;

  InvariantTensor expand() const { return beta_expand_partition(chr, W, R, args); }

  std::string str() const {
    std::ostringstream os;
    os << "beta(" << W.str() << ", " << R.str() << "; ";
    for (size_t i = 0; i < args.size(); ++i) os << (i ? ", " : "") << args[i];
    os << ")";
    return os.str();
  }
};

inline BetaTerm drop_zero_parts(const BetaTerm &t) {
  require(!t.is_nested(), "letter arguments expected");
  std::vector<long long> parts;
  Word args;
  for (int i = 0; i < t.r.len(); ++i)
    if (t.r[i] > 0) {
      parts.push_back(t.r[i]);
      args.push_back(t.args[i]);
    }
  return BetaTerm(t.x, Composition(parts), args);
}

namespace detail {
// sorted copy layout for beta_{x,r}(inner_1,...,inner_p): slot l carries a
// copy of inner_{group(l)} on the ground interval (off[l-1], off[l]]
struct MergeLayout {
  std::vector<BetaTerm> in;
  std::vector<Composition> qs;
  std::vector<int> group;    // per slot, 0-based inner index
  std::vector<long long> off; // off[l] = end of slot l's interval
  long long n = 0, N = 0;

  MergeLayout(const Composition &r, const std::vector<BetaTerm> &inner) {
    require((int)inner.size() == r.len(), "argument count mismatch");
    for (auto &t : inner) {
      require(!t.is_nested(), "one nesting level at a time");
      in.push_back(drop_zero_parts(t));
      qs.push_back(in.back().r);
    }
    n = r.sum();
    group.resize(n);
    long long at = 0;
    for (int i = 0; i < r.len(); ++i) {
      for (long long k = 0; k < r[i]; ++k) group[at + k] = i;
      at += r[i];
    }
    off.assign(n + 1, 0);
    for (long long l = 1; l <= n; ++l) off[l] = off[l - 1] + qs[group[l - 1]].sum();
    N = off[n];
  }

  SetPartition index_partition(const Composition &r) const {
    std::vector<SetPartition> iotas;
    for (auto &q : qs) iotas.push_back(iota(q));
    return diamond(r, iotas);
  }
  Word all_args() const {
    Word w;
    for (auto &t : in) w.insert(w.end(), t.args.begin(), t.args.end());
    return w;
  }
  Composition slot_sizes() const {
    std::vector<long long> s;
    for (long long l = 1; l <= n; ++l) s.push_back(off[l] - off[l - 1]);
    return Composition(s);
  }
};
} // namespace detail

// ---------------------------------------------------------------------------
// merge_nested: flatten beta_{x,r}(inner_1,...,inner_p) with everything in one
// operad. Composite of x with copies of the inner elements in the sorted
// layout, summed over the wreath coset representatives, indexed by the
// diamond partition. This is the monad multiplication before re-reading.
// ---------------------------------------------------------------------------
inline PartitionBeta merge_nested(const El &x, const Composition &r,
                                  const std::vector<BetaTerm> &inner, bool slow_reps = false) {
  int chr = x.chr;
  require(invariants_under(x, r), "element not invariant under the composition");
  detail::MergeLayout lay(r, inner);
  require(x.is_zero() || x.t.begin()->first.arity() == (int)lay.n, "arity mismatch");
  El comp = relabel(x, [&](long long l) { return lay.N + l; });
  for (long long l = 1; l <= lay.n; ++l) {
    El yc = relabel(lay.in[lay.group[l - 1]].x, [&](long long k) { return lay.off[l - 1] + k; });
    comp = compose_at(comp, lay.N + l, yc);
  }
  El W(chr);
  auto reps = slow_reps ? wreath_coset_representatives(r, lay.qs) : wreath_cosets(r, lay.qs);
  for (auto &tau : reps) W += act_left(tau, comp);
  return {chr, W, lay.index_partition(r), lay.all_args()};
}

inline InvariantTensor gamma_monad_tensor(const BetaTerm &s) {
  require(s.is_nested(), "nested term expected");
  return merge_nested(s.x, s.r, s.nested).expand();
}

inline BetaExpression gamma_monad_mult(const BetaTerm &s) {
  if (!s.is_nested()) return {s};
  return tensor_to_beta(gamma_monad_tensor(s));
}

// ---------------------------------------------------------------------------
// Associator for Gamma(P, Gamma(Q, V)): lift both levels into the product
// operad, where the composite never invokes the law, and merge.
// ---------------------------------------------------------------------------
inline PartitionBeta associator(Opid pop, const El &x_top, const Composition &r,
                                const std::vector<BetaTerm> &inner_bottom) {
  std::vector<BetaTerm> lifted;
  for (auto &t : inner_bottom) {
    require(!t.is_nested(), "one nesting level at a time");
    lifted.push_back(BetaTerm(lift_bottom(pop, t.x), t.r, t.args));
  }
  return merge_nested(lift_top(pop, x_top), r, lifted);
}

// ---------------------------------------------------------------------------
// Characteristic-zero evaluator for arbitrarily nested terms: plug the
// argument values into x, symmetrize over all coset representatives of the
// slot-interval Young subgroup, and divide by the block factorials. Serves as
// an independent oracle for merge_nested.
// ---------------------------------------------------------------------------
inline InvariantTensor nested_value0(const BetaTerm &s) {
  require(s.x.chr == 0, "characteristic zero only");
  if (!s.is_nested()) return beta_expand(0, s);
  std::vector<BetaTerm> flat_inner;
  std::vector<InvariantTensor> vals;
  for (auto &t : s.nested) {
    InvariantTensor v = nested_value0(t);
    if (v.is_zero()) return InvariantTensor(0);
    long long m = (long long)v.t.begin()->first.w.size();
    // stand-in letter term carrying only the inner arity for the layout
    flat_inner.push_back(
        BetaTerm(El(0, basis(v.t.begin()->first.m.op, (int)m).front()),
                 Composition(std::vector<long long>(m, 1)), Word(m, "_")));
    vals.push_back(std::move(v));
  }
  detail::MergeLayout lay(s.r, flat_inner);
  InvariantTensor plugged(0);
  for (auto &[xm, cx] : s.x.t) {
    // choose one term of each slot's value
    std::function<void(long long, Coeff, El, Word)> rec = [&](long long l, Coeff coef, El acc,
                                                              Word w) {
      if (l > lay.n) {
        for (auto &[m, c] : acc.t) plugged.add({m, w}, coef * c);
        return;
      }
      const InvariantTensor &v = vals[lay.group[l - 1]];
      for (auto &[k, c] : v.t) {
        El ml = relabel(0, k.m, [&](long long g) { return lay.off[l - 1] + g; });
        Word w2 = w;
        w2.insert(w2.end(), k.w.begin(), k.w.end());
        rec(l + 1, coef * c, compose_at(acc, lay.N + l, ml), w2);
      }
    };
    rec(1, cx, relabel(El(0, xm), [&](long long l) { return lay.N + l; }), {});
  }
  InvariantTensor out(0);
  for (auto &sg : coset_representatives(lay.N, lay.slot_sizes())) out += diag_act(sg, plugged);
  Coeff c = Coeff::one(0);
  for (long long ri : s.r.parts) c *= Coeff(0, BigRat(1, factorial_int(ri)));
  return c * out;
}

// ---------------------------------------------------------------------------
// The rewriting engine: beta_{x,r}(beta_{y_i,q_i}(args)) with x over the
// bottom operad and y_i over the top operad becomes a partition-indexed term
// over the product operad, with the law applied once per monomial combination
// and the result summed over the wreath coset representatives.
// ---------------------------------------------------------------------------
inline PartitionBeta tilde_lambda_merged(LawKind law, int chr, const BetaTerm &s) {
  require(s.is_nested(), "nested term expected");
  require(invariants_under(s.x, s.r), "element not invariant under the composition");
  detail::MergeLayout lay(s.r, s.nested);
  require(!s.x.is_zero() && s.x.t.begin()->first.arity() == (int)lay.n, "arity mismatch");
  std::vector<El> Y(lay.n + 1, El(chr));
  for (long long l = 1; l <= lay.n; ++l)
    Y[l] = relabel(lay.in[lay.group[l - 1]].x, [&](long long k) { return lay.off[l - 1] + k; });
  El lam(chr);
  for (auto &[xm, cx] : s.x.t) {
    std::map<long long, Mon> amap;
    std::function<void(long long, Coeff)> rec = [&](long long l, Coeff coef) {
      if (l > lay.n) {
        lam += coef * law_apply(law, chr, xm, amap);
        return;
      }
      for (auto &[m, c] : Y[l].t) {
        amap[l] = m;
        rec(l + 1, coef * c);
      }
    };
    rec(1, cx);
  }
  El W(chr);
  for (auto &tau : wreath_cosets(s.r, lay.qs)) W += act_left(tau, lam);
  return {chr, W, lay.index_partition(s.r), lay.all_args()};
}

inline InvariantTensor tilde_lambda(LawKind law, int chr, const BetaTerm &s) {
  return tilde_lambda_merged(law, chr, s).expand();
}

// ---------------------------------------------------------------------------
// The diagram oracle for the engine: unit-insert both levels into the product
// operad, symmetrize the *uncomposed* pair over the wreath coset
// representatives, then compose in the product operad (where the law acts
// through the product composition, a separate code path from law_apply).
// ---------------------------------------------------------------------------
inline InvariantTensor tilde_lambda_oracle(LawKind law, int chr, const BetaTerm &s) {
  require(s.is_nested(), "nested term expected");
  require(invariants_under(s.x, s.r), "element not invariant under the composition");
  detail::MergeLayout lay(s.r, s.nested);
  require(!lay.in.empty() && !lay.in[0].x.is_zero(), "empty inner element");
  Opid top = lay.in[0].x.t.begin()->first.op;
  Opid pop = law == LawKind::Pois ? Opid::Pois : product_op(law, top);
  El xh = lift_bottom(pop, s.x);
  std::vector<El> Yh(lay.n + 1, El(chr));
  for (long long l = 1; l <= lay.n; ++l)
    Yh[l] = relabel(lift_top(pop, lay.in[lay.group[l - 1]].x),
                    [&](long long k) { return lay.off[l - 1] + k; });
  El W(chr);
  for (auto &tau : wreath_cosets(s.r, lay.qs)) {
    std::vector<El> Yt(lay.n + 1, El(chr));
    for (long long l = 1; l <= lay.n; ++l)
      Yt[l] = relabel(Yh[l], [&](long long g) { return tau(g); });
    for (auto &[xm, cx] : xh.t) {
      El tops = relabel(El(chr, xm), [&](long long l) { return lay.N + l; });
      for (auto &[tm, ct] : tops.t) {
        std::function<void(long long, Coeff, El)> rec = [&](long long l, Coeff coef, El acc) {
          if (l > lay.n) {
            W += coef * acc;
            return;
          }
          for (auto &[m, c] : Yt[l].t) rec(l + 1, coef * c, compose_at(acc, lay.N + l, El(chr, m)));
        };
        rec(1, cx * ct, El(chr, tm));
      }
    }
  }
  return beta_expand_partition(chr, W, lay.index_partition(s.r), lay.all_args());
}

// ---------------------------------------------------------------------------
// Characteristic conversions for integrality cross-checks.
// ---------------------------------------------------------------------------
inline El el_to_char(int chr, const El &x) {
  El out(chr);
  for (auto &[m, c] : x.t) {
    Mon mm = m;
    out.add(mm, Coeff(chr, c.rat()));
  }
  return out;
}

inline InvariantTensor tensor_to_char(int chr, const InvariantTensor &T) {
  InvariantTensor out(chr);
  for (auto &[k, c] : T.t) out.add(k, Coeff(chr, c.rat()));
  return out;
}

inline BetaTerm term_to_char(int chr, const BetaTerm &t) {
  if (t.is_nested()) {
    std::vector<BetaTerm> in;
    for (auto &u : t.nested) in.push_back(term_to_char(chr, u));
    return BetaTerm(el_to_char(chr, t.x), t.r, in);
  }
  return BetaTerm(el_to_char(chr, t.x), t.r, t.args);
}

} // namespace dpa

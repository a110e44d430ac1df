#pragma once
#include "dpa/mon.hpp"
#include "dpa/operads.hpp"
#include "dpa/report.hpp"

namespace dpa {

// ---------------------------------------------------------------------------
// The rewriting rules Q.P -> P.Q on mixed monomials, as closed formulas.
// ---------------------------------------------------------------------------

// (d^e; mu) for mu a Com or Lie monomial, into the matching P.D product
inline El d_law_apply(LawKind law, int chr, long long e, const Mon &mu) {
  Opid pop = product_op(law, mu.op);
  std::vector<long long> labs = mu.labels();
  El out(chr);
  if (law == LawKind::Shift) {
    std::map<long long, long long> exps;
    for (long long l : labs) exps[l] = e;
    out.add(mk_pd(pop, mu, exps), Coeff::one(chr));
  } else if (law == LawKind::Der) {
    for (auto &q : compositions_of(e, (int)labs.size())) {
      Coeff c = multinomial(chr, e, q);
      if (c.is_zero()) continue;
      std::map<long long, long long> exps;
      for (size_t i = 0; i < labs.size(); ++i) exps[labs[i]] = q[i];
      out.add(mk_pd(pop, mu, exps), c);
    }
  } else {
    fail("not a d-law");
  }
  return out;
}

inline El shift_law(int chr, long long e, const Mon &mu) {
  return d_law_apply(LawKind::Shift, chr, e, mu);
}
inline El der_law(int chr, long long e, const Mon &mu) {
  return d_law_apply(LawKind::Der, chr, e, mu);
}

// (x; K_1,...,K_s): a Lie comb over Com monomials, into Pois by iterated
// Leibniz rewriting; slot l of x carries the Com monomial args[l]
inline El pois_law(int chr, const std::vector<long long> &xcomb,
                   const std::map<long long, Mon> &args) {
  std::vector<El> leaves;
  for (long long l : xcomb) {
    const Mon &K = args.at(l);
    std::vector<std::vector<long long>> fs;
    for (long long v : K.seq) fs.push_back({v});
    leaves.push_back(mk_pois(chr, fs));
  }
  return pois_eval_comb(chr, leaves);
}

// Uniform entry: apply a law to (q-monomial; p-monomials under its slots).
// For the d-laws the q-monomial is d^e; for Pois it is a Lie element.
inline El law_apply(LawKind law, int chr, const Mon &q, const std::map<long long, Mon> &args) {
  if (law == LawKind::Pois) {
    require(q.op == Opid::Lie, "pois law expects a Lie monomial on top");
    return pois_law(chr, q.seq, args);
  }
  require(q.op == Opid::D, "d-law expects a D monomial on top");
  return d_law_apply(law, chr, q.dexp[0].second, args.at(q.dexp[0].first));
}

// product_compose is just composition in the product operad
inline El product_compose(const El &x, int i, const El &y) { return operad_compose(x, i, y); }

// ---------------------------------------------------------------------------
// ODL diagram verification on basis stacks.
// ---------------------------------------------------------------------------
namespace detail {

// all ways to pick arities (m_1..m_s) with sum n, m_i >= 1
inline std::vector<std::vector<long long>> arity_splits(int s, long long n) {
  std::vector<std::vector<long long>> out;
  for (auto &c : compositions_of(n - s, s)) {
    std::vector<long long> m(c);
    for (auto &v : m) v += 1;
    out.push_back(m);
  }
  return out;
}

} // namespace detail

// Verify ODL1..ODL4 for the given law over top operad P (for the d-laws) or
// for the Leibniz law (P=Com, Q=Lie), on all basis stacks with total arity
// <= max_arity; d-exponents are capped by max_arity as well.
inline Report check_odl(LawKind law, Opid P, int chr, int max_arity) {
  Report rep;
  rep.scenario = "check-odl";
  rep.chr = chr;
  Stopwatch sw;
  std::string lname = law == LawKind::Shift   ? "shift"
                      : law == LawKind::Der   ? "derivation"
                                              : "poisson";
  lname += "/" + opid_str(P);
  Opid pop = law == LawKind::Pois ? Opid::Pois : product_op(law, P);
  long long dmax = max_arity;

  Check c1{lname, "ODL1", max_arity, 0, {}}, c2{lname, "ODL2", max_arity, 0, {}},
      c3{lname, "ODL3", max_arity, 0, {}}, c4{lname, "ODL4", max_arity, 0, {}};

  auto record = [&](Check &c, const El &lhs, const El &rhs, const std::string &input) {
    ++c.instances;
    if (!(lhs == rhs)) c.failures.push_back({input, lhs.str(), rhs.str()});
  };

  if (law != LawKind::Pois) {
    // Q = D is concentrated in arity 1.
    // ODL2: law(d^e; 1_P) = (1_P; d^e)
    for (long long e = 0; e <= dmax; ++e) {
      El lhs = d_law_apply(law, chr, e, unit_mon(P, 1));
      El rhs(chr, mk_pd(pop, unit_mon(P, 1), {{1, e}}));
      record(c2, lhs, rhs, "d^" + std::to_string(e));
    }
    for (int n = 1; n <= max_arity; ++n)
      for (auto &mu : basis(P, n)) {
        // ODL4: law(d^0; mu) = (mu; d^0...)
        record(c4, d_law_apply(law, chr, 0, mu), El(chr, mk_pd(pop, mu, {})), mu.str());
        for (long long e = 0; e <= dmax; ++e) {
          // ODL3 on (d^j; d^k; mu): law(d^{j+k}) vs push d^j through law(d^k; mu)
          for (long long j = 0; j <= e; ++j) {
            long long k = e - j;
            El lhs = d_law_apply(law, chr, e, mu);
            El rhs(chr);
            for (auto &[m, c] : d_law_apply(law, chr, k, mu).t) rhs += c * pd_push(chr, j, m);
            record(c3, lhs, rhs,
                   "(d^" + std::to_string(j) + ";d^" + std::to_string(k) + ";" + mu.str() + ")");
          }
          // ODL1 on (d^e; mu; (z_k)): law after composing vs product-composing
          for (auto &ms : detail::arity_splits(n, std::min<long long>(max_arity, n + 1))) {
            // ground labels: intervals; slot ids shifted above ground
            long long N = 0;
            for (long long m : ms) N += m;
            std::vector<Mon> zs;
            std::vector<long long> slot_ids;
            long long at = 0;
            for (int k = 0; k < n; ++k) {
              // one basis choice per slot keeps the instance count reasonable
              Mon z = basis(P, (int)ms[k])[0];
              std::vector<long long> gl;
              for (long long t = 1; t <= ms[k]; ++t) gl.push_back(at + t);
              at += ms[k];
              std::map<long long, long long> f;
              for (size_t t = 0; t < gl.size(); ++t) f[(long long)t + 1] = gl[t];
              El ze = relabel(El(chr, z), [&](long long l) { return f[l]; });
              zs.push_back(ze.t.begin()->first); // single-monomial relabels for Com; Lie may sign
              slot_ids.push_back(N + k + 1);
            }
            // mu at slot ids N+1..N+n
            El mus = relabel(El(chr, mu), [&](long long l) { return N + l; });
            // LHS: compose mu with z's, then law
            El composed(chr);
            for (auto &[mm, cm] : mus.t) {
              El acc(chr, mm);
              for (int k = 0; k < n; ++k) acc = compose_at(acc, slot_ids[k], El(chr, zs[k]));
              composed += cm * acc;
            }
            El lhs(chr);
            for (auto &[mm, cm] : composed.t) lhs += cm * d_law_apply(law, chr, e, mm);
            // RHS: law on mu, then product-compose the z's (exponent 0)
            El rhs(chr);
            for (auto &[mm, cm] : mus.t) rhs += cm * d_law_apply(law, chr, e, mm);
            for (int k = 0; k < n; ++k) rhs = compose_at(rhs, slot_ids[k], El(chr, mk_pd(pop, zs[k], {})));
            record(c1, lhs, rhs, "(d^" + std::to_string(e) + ";" + mu.str() + ";...)");
          }
        }
      }
  } else {
    // Q = Lie, P = Com
    auto com_mon_at = [&](long long lo, long long m) {
      std::vector<long long> l;
      for (long long t = 0; t < m; ++t) l.push_back(lo + t);
      return mk_com(l);
    };
    // ODL2: law(x; units) = single-factor monomial of x
    for (int n = 1; n <= max_arity; ++n)
      for (auto &x : basis(Opid::Lie, n)) {
        std::map<long long, Mon> args;
        for (long long l : x.seq) args[l] = mk_com({l});
        record(c2, pois_law(chr, x.seq, args), mk_pois(chr, {x.seq}), x.str());
      }
    // ODL4: law(1_Q; X_n) = X_n as a Pois monomial
    for (int n = 1; n <= max_arity; ++n) {
      std::map<long long, Mon> args;
      args[1] = com_mon_at(1, n);
      std::vector<std::vector<long long>> fs;
      for (long long t = 1; t <= n; ++t) fs.push_back({t});
      record(c4, pois_law(chr, {1}, args), mk_pois(chr, fs), "X" + std::to_string(n));
    }
    // ODL1 on (x; (X_{m_k}); (X_{u})): Com level composes by unioning labels
    for (int s = 1; s <= max_arity; ++s)
      for (auto &x : basis(Opid::Lie, s))
        for (long long n = s; n <= max_arity; ++n)
          for (auto &ms : detail::arity_splits(s, n))
            for (long long N = n; N <= max_arity; ++N)
              for (auto &us : detail::arity_splits((int)n, N)) {
                // y_k = X_{m_k} on secondary slots, z_j = X_{u_j} on ground
                // intervals; secondary slot ids sit above the ground labels
                std::vector<long long> sec_ids; // n secondary slots
                for (long long t = 1; t <= n; ++t) sec_ids.push_back(N + t);
                std::map<long long, Mon> yargs; // per x-slot: Com mon on secondary ids
                long long at = 0;
                for (int k = 0; k < s; ++k) {
                  std::vector<long long> l(sec_ids.begin() + at, sec_ids.begin() + at + ms[k]);
                  yargs[x.seq[k]] = mk_com(l);
                  at += ms[k];
                }
                std::vector<Mon> zs;
                long long gat = 0;
                for (size_t j = 0; j < us.size(); ++j) {
                  zs.push_back(com_mon_at(gat + 1, us[j]));
                  gat += us[j];
                }
                // LHS: compose y's with z's (union of ground labels), then law
                std::map<long long, Mon> composed;
                for (int k = 0; k < s; ++k) {
                  std::vector<long long> labs;
                  for (long long sid : yargs[x.seq[k]].seq) {
                    auto &z = zs[sid - N - 1];
                    labs.insert(labs.end(), z.seq.begin(), z.seq.end());
                  }
                  composed[x.seq[k]] = mk_com(labs);
                }
                El lhs = pois_law(chr, x.seq, composed);
                // RHS: law on secondary slots, then product-compose the z's
                El rhs = pois_law(chr, x.seq, yargs);
                for (long long j = 0; j < (long long)zs.size(); ++j) {
                  std::vector<std::vector<long long>> fs;
                  for (long long v : zs[j].seq) fs.push_back({v});
                  rhs = compose_at(rhs, sec_ids[j], mk_pois(chr, fs));
                }
                record(c1, lhs, rhs, x.str() + ";" + std::to_string(n) + ";" + std::to_string(N));
              }
    // ODL3 on (x; (x'_k); (X_{m_j})): Lie composes above, law below
    for (int s = 1; s <= max_arity; ++s)
      for (auto &x : basis(Opid::Lie, s))
        for (long long n = s; n <= max_arity; ++n)
          for (auto &ks : detail::arity_splits(s, n))
            for (long long N = n; N <= max_arity; ++N)
              for (auto &us : detail::arity_splits((int)n, N)) {
                // inner Lie monomials on mid labels, Com args on ground labels
                std::vector<Mon> xps;
                long long at = 0;
                for (int k = 0; k < s; ++k) {
                  // left-comb representative on the mid interval
                  std::vector<long long> c;
                  for (long long t = 1; t <= ks[k]; ++t) c.push_back(N + at + t);
                  at += ks[k];
                  Mon m;
                  m.op = Opid::Lie;
                  m.seq = c;
                  xps.push_back(m);
                }
                std::map<long long, Mon> yargs; // mid label -> Com mon on ground
                long long gat = 0;
                for (long long j = 0; j < n; ++j) {
                  std::vector<long long> l;
                  for (long long t = 1; t <= us[j]; ++t) l.push_back(gat + t);
                  gat += us[j];
                  yargs[N + j + 1] = mk_com(l);
                }
                // LHS: compose x with x'_k in Lie, then law
                El xcomp(chr, x);
                for (int k = 0; k < s; ++k) xcomp = compose_at(xcomp, x.seq[k], El(chr, xps[k]));
                El lhs(chr);
                for (auto &[mm, cm] : xcomp.t) lhs += cm * pois_law(chr, mm.seq, yargs);
                // RHS: law inside, law over the factor tops, then compose parts
                std::vector<El> inner;
                for (auto &xp : xps) inner.push_back(pois_law(chr, xp.seq, yargs));
                El rhs(chr);
                // iterate over monomial combinations of the inner results
                std::function<void(size_t, Coeff, std::vector<Mon> &)> loop =
                    [&](size_t k, Coeff coef, std::vector<Mon> &sel) {
                      if (k == inner.size()) {
                        // virtual label of each factor = its minimal label
                        std::map<long long, Mon> tops;
                        for (int t = 0; t < s; ++t) {
                          std::vector<long long> vl;
                          for (auto &f : sel[t].factors) vl.push_back(f[0]);
                          tops[x.seq[t]] = mk_com(vl);
                        }
                        El mid = pois_law(chr, x.seq, tops);
                        for (int t = 0; t < s; ++t)
                          for (auto &f : sel[t].factors)
                            mid = compose_at(mid, f[0], mk_pois(chr, {f}));
                        rhs += coef * mid;
                        return;
                      }
                      for (auto &[m, c] : inner[k].t) {
                        sel.push_back(m);
                        loop(k + 1, coef * c, sel);
                        sel.pop_back();
                      }
                    };
                std::vector<Mon> sel;
                loop(0, Coeff::one(chr), sel);
                record(c3, lhs, rhs, x.str() + ";" + std::to_string(n) + ";" + std::to_string(N));
              }
  }

  rep.checks = {c1, c2, c3, c4};
  rep.wall_ms = sw.ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Partition operad via Shift_Com: block index = exponent of d.
// ---------------------------------------------------------------------------
inline Mon shiftcom_of_partition(const SetPartition &J) {
  std::map<long long, long long> exps;
  std::vector<long long> labs;
  for (int b = 0; b < J.num_blocks(); ++b)
    for (long long e : J.blocks[b]) {
      exps[e] = b; // block index (0-based) = d exponent
      labs.push_back(e);
    }
  return mk_pd(Opid::ShiftCom, mk_com(labs), exps);
}

inline SetPartition partition_of_shiftcom(const Mon &m, int nblocks) {
  std::vector<std::vector<long long>> blocks(nblocks);
  for (auto &[l, e] : m.dexp) {
    require(e < nblocks, "exponent exceeds block count");
    blocks[e].push_back(l);
  }
  long long n = (long long)m.dexp.size();
  return SetPartition(n, blocks);
}

inline SetPartition partition_circ(const SetPartition &J, int l, const SetPartition &K) {
  require(1 <= l && l <= J.n, "index out of range");
  El x(0, shiftcom_of_partition(J)), y(0, shiftcom_of_partition(K));
  El z = operad_compose(x, l, y);
  require(z.t.size() == 1, "unexpected composite");
  // K's blocks land at offsets after the block holding l; trailing empty
  // blocks of either input are preserved
  int s = std::max(J.num_blocks(), J.owner(l) + K.num_blocks() - 1);
  return partition_of_shiftcom(z.t.begin()->first, s);
}

} // namespace dpa

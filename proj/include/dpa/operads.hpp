#pragma once
#include "dpa/linalg.hpp"
#include "dpa/mon.hpp"

#include <string>

namespace dpa {

// ---------------------------------------------------------------------------
// Basis enumeration at standard labels 1..n. D and the P.D products are
// infinite-dimensional per arity; exponents are capped by dbound.
// ---------------------------------------------------------------------------
inline std::vector<Mon> basis(Opid op, int n, long long dbound = 0) {
  std::vector<Mon> out;
  std::vector<long long> labs(n);
  std::iota(labs.begin(), labs.end(), 1);
  switch (op) {
  case Opid::Com: out.push_back(mk_com(labs)); break;
  case Opid::As: {
    std::vector<long long> s = labs;
    do out.push_back(mk_as(s));
    while (std::next_permutation(s.begin(), s.end()));
    break;
  }
  case Opid::D: {
    require(n == 1, "D is concentrated in arity 1");
    for (long long e = 0; e <= dbound; ++e) out.push_back(mk_d(1, e));
    break;
  }
  case Opid::Lie: {
    std::vector<long long> rest(labs.begin() + 1, labs.end());
    std::sort(rest.begin(), rest.end());
    do {
      Mon m;
      m.op = Opid::Lie;
      m.seq = {1};
      m.seq.insert(m.seq.end(), rest.begin(), rest.end());
      out.push_back(m);
    } while (std::next_permutation(rest.begin(), rest.end()));
    break;
  }
  case Opid::ShiftCom:
  case Opid::DerCom:
  case Opid::ShiftLie:
  case Opid::DerLie: {
    for (auto &topm : basis(top_of(op), n))
      for (auto &e : compositions_of(dbound, n + 1)) { // exponent tuples, total <= dbound
        std::map<long long, long long> exps;
        for (int i = 0; i < n; ++i) exps[i + 1] = e[i];
        Mon m = mk_pd(op, topm, exps);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      }
    break;
  }
  case Opid::Pois: {
    // set partitions of [n] with a Lie basis comb per block
    std::vector<std::vector<std::vector<long long>>> parts; // partitions as block lists
    std::function<void(int, std::vector<std::vector<long long>> &)> rec =
        [&](int next, std::vector<std::vector<long long>> &cur) {
          if (next > n) {
            parts.push_back(cur);
            return;
          }
          for (size_t bi = 0; bi < cur.size(); ++bi) {
            cur[bi].push_back(next);
            rec(next + 1, cur);
            cur[bi].pop_back();
          }
          cur.push_back({next});
          rec(next + 1, cur);
          cur.pop_back();
        };
    std::vector<std::vector<long long>> cur;
    rec(1, cur);
    for (auto &p : parts) {
      // per block, all Lie basis combs (min first, rest permuted)
      std::vector<std::vector<std::vector<long long>>> choices;
      for (auto &b : p) {
        std::vector<std::vector<long long>> cs;
        std::vector<long long> rest(b.begin() + 1, b.end());
        std::sort(rest.begin(), rest.end());
        do {
          std::vector<long long> c = {b[0]};
          c.insert(c.end(), rest.begin(), rest.end());
          cs.push_back(c);
        } while (std::next_permutation(rest.begin(), rest.end()));
        choices.push_back(cs);
      }
      std::vector<size_t> idx(p.size(), 0);
      while (true) {
        Mon m;
        m.op = Opid::Pois;
        for (size_t i = 0; i < p.size(); ++i) m.factors.push_back(choices[i][idx[i]]);
        std::sort(m.factors.begin(), m.factors.end(),
                  [](auto &a, auto &b) { return a[0] < b[0]; });
        out.push_back(m);
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    std::sort(out.begin(), out.end());
    break;
  }
  }
  return out;
}

// right action by a permutation (degree = arity)
inline El symmetric_action(const El &x, const Perm &s) {
  if (!x.is_zero()) require(s.n() == x.t.begin()->first.arity(), "degree mismatch");
  return act_right(x, s);
}

// Basis of the fixed space P(n)^{S_r} as elements, via nullspace of the
// Young-generator actions.
inline std::vector<El> fixed_space_basis(Opid op, int chr, const Composition &r,
                                         long long dbound = 0) {
  int n = (int)r.sum();
  std::vector<Mon> bs = basis(op, n, dbound);
  std::vector<Perm> gens;
  long long at = 0;
  for (long long ri : r.parts) {
    for (long long k = 1; k < ri; ++k) gens.push_back(Perm::transposition(n, at + k, at + k + 1));
    at += ri;
  }
  if (gens.empty()) {
    std::vector<El> out;
    for (auto &m : bs) out.push_back(El(chr, m));
    return out;
  }
  // key: (generator index, monomial); column j = images of basis vector j
  using Key = std::pair<int, Mon>;
  ColSolver<Key> cs;
  std::vector<SVec<int>> null_combos;
  for (size_t j = 0; j < bs.size(); ++j) {
    El e(chr, bs[j]);
    SVec<Key> col;
    for (size_t g = 0; g < gens.size(); ++g) {
      El diff = act_right(e, gens[g]) - e;
      for (auto &[m, c] : diff.t) col.emplace(Key{(int)g, m}, c);
    }
    if (auto combo = cs.add_col(std::move(col), chr)) null_combos.push_back(*combo);
  }
  std::vector<El> out;
  for (auto &combo : null_combos) {
    El v(chr);
    for (auto &[j, c] : combo) v += c * El(chr, bs[j]);
    out.push_back(v);
  }
  return out;
}

// L_p: sum over sigma in S_p with sigma(1)=1 of the left comb acted by sigma
inline El frobenius_element(int chr, int p) {
  std::vector<long long> comb(p);
  std::iota(comb.begin(), comb.end(), 1);
  El base = mk_lie(chr, comb);
  El out(chr);
  std::vector<long long> rest(p - 1);
  std::iota(rest.begin(), rest.end(), 2);
  do {
    std::vector<long long> img = {1};
    img.insert(img.end(), rest.begin(), rest.end());
    out += act_right(base, Perm(img));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Free-algebra elements: formal sums of monomials applied to generator words
// (repeats allowed), canonicalized modulo the stabilizer of the sorted word.
// ---------------------------------------------------------------------------
namespace detail {
// canonical reduction of x modulo span{ b.g - b : b basis, g in Stab(word) gens }
inline El coinvariant_reduce(Opid op, int chr, const El &x,
                             const std::vector<std::string> &sorted_word, long long dbound = 0) {
  int n = (int)sorted_word.size();
  // Young generators of the stabilizer of the sorted word
  std::vector<Perm> gens;
  for (int i = 1; i < n; ++i)
    if (sorted_word[i - 1] == sorted_word[i]) gens.push_back(Perm::transposition(n, i, i + 1));
  if (gens.empty()) return x;
  static std::map<std::tuple<Opid, int, std::vector<int>, long long>, Sifter<Mon>> cache;
  std::vector<int> gpos;
  for (int i = 1; i < n; ++i)
    if (sorted_word[i - 1] == sorted_word[i]) gpos.push_back(i);
  auto key = std::make_tuple(op, chr, gpos, dbound);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Sifter<Mon> sf;
    for (auto &b : basis(op, n, dbound))
      for (auto &g : gens) {
        El diff = act_right(El(chr, b), g) - El(chr, b);
        SVec<Mon> v(diff.t.begin(), diff.t.end());
        sf.add(std::move(v));
      }
    it = cache.emplace(key, std::move(sf)).first;
  }
  SVec<Mon> v(x.t.begin(), x.t.end());
  v = it->second.reduce(std::move(v));
  El out(chr);
  for (auto &[m, c] : v) out.add(m, c);
  return out;
}
} // namespace detail

struct FreeEl {
  Opid op = Opid::Com;
  int chr = 0;
  std::map<std::vector<std::string>, El> comp; // sorted word -> reduced element

  bool is_zero() const { return comp.empty(); }
  void addc(const std::vector<std::string> &w, const El &e) {
    if (e.is_zero()) return;
    auto it = comp.find(w);
    if (it == comp.end()) {
      comp.emplace(w, e);
    } else {
      it->second += e;
      if (it->second.is_zero()) comp.erase(it);
    }
  }
  FreeEl &operator+=(const FreeEl &o) {
    for (auto &[w, e] : o.comp) addc(w, e);
    return *this;
  }
  FreeEl &operator-=(const FreeEl &o) {
    for (auto &[w, e] : o.comp) addc(w, -Coeff::one(chr) * e);
    return *this;
  }
  friend FreeEl operator+(FreeEl a, const FreeEl &b) { return a += b; }
  friend FreeEl operator-(FreeEl a, const FreeEl &b) { return a -= b; }
  friend FreeEl operator*(const Coeff &c, FreeEl a) {
    FreeEl out{a.op, a.chr, {}};
    for (auto &[w, e] : a.comp) out.addc(w, c * e);
    return out;
  }
  bool operator==(const FreeEl &o) const { return comp == o.comp; }

  std::string str() const;
};

// substitute a word of generators into the slots of x; repeats allowed
inline FreeEl evaluate(Opid op, const El &x, const std::vector<std::string> &word,
                       long long dbound = 0) {
  FreeEl out{op, x.chr, {}};
  if (x.is_zero()) return out;
  int n = (int)word.size();
  require(x.t.begin()->first.arity() == n, "word length must match arity");
  // stable sort of the word; sigma sends old label -> new label
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return word[a] < word[b]; });
  std::vector<std::string> ws(n);
  std::vector<long long> img(n);
  for (int pos = 0; pos < n; ++pos) {
    ws[pos] = word[order[pos]];
    img[order[pos]] = pos + 1;
  }
  El xr = relabel(x, [&](long long l) { return img[l - 1]; });
  out.addc(ws, detail::coinvariant_reduce(op, x.chr, xr, ws, dbound));
  return out;
}

// s_i(x,y): coefficient of lambda^{i-1} in ad(lambda x + y)^{p-1}(x), as the
// word-sum over bracketing sequences with i-1 occurrences of x
inline FreeEl jacobson_s(int chr, int i, int p) {
  require(1 <= i && i <= p - 1, "index out of range");
  FreeEl out{Opid::Lie, chr, {}};
  int len = p - 1;
  for (long long mask = 0; mask < (1LL << len); ++mask) {
    int xs = 0;
    for (int k = 0; k < len; ++k)
      if (mask >> k & 1) ++xs;
    if (xs != i - 1) continue;
    // [w1;[w2;...[w_{p-1};x]...]] with labels 1..p, right-nested
    El acc = El(chr, unit_mon(Opid::Lie, p));
    for (int k = len; k >= 1; --k) acc = lie_eval_comb(chr, {El(chr, unit_mon(Opid::Lie, k)), acc});
    std::vector<std::string> word;
    for (int k = 0; k < len; ++k) word.push_back((mask >> k & 1) ? "x" : "y");
    word.push_back("x");
    out += evaluate(Opid::Lie, acc, word);
  }
  return out;
}

// print a monomial with generator letters substituted for its labels
inline std::string mon_word_str(const Mon &m, const std::vector<std::string> &word) {
  auto at = [&](long long lab) { return word[lab - 1]; };
  auto comb_str = [&](const std::vector<long long> &c) {
    std::string s;
    for (size_t i = 1; i < c.size(); ++i) s += '[';
    s += at(c[0]);
    for (size_t i = 1; i < c.size(); ++i) s += ";" + at(c[i]) + "]";
    return s;
  };
  std::ostringstream os;
  switch (m.op) {
  case Opid::Com: {
    for (size_t i = 0; i < m.seq.size(); ++i) os << (i ? "*" : "") << at(m.seq[i]);
    break;
  }
  case Opid::As: {
    for (size_t i = 0; i < m.seq.size(); ++i) os << (i ? "*" : "") << at(m.seq[i]);
    break;
  }
  case Opid::Lie: os << comb_str(m.seq); break;
  case Opid::Pois: {
    for (size_t i = 0; i < m.factors.size(); ++i) os << (i ? "*" : "") << comb_str(m.factors[i]);
    break;
  }
  case Opid::D: {
    auto [l, e] = m.dexp[0];
    if (e == 0)
      os << at(l);
    else {
      os << "d";
      if (e > 1) os << "^" << e;
      os << "(" << at(l) << ")";
    }
    break;
  }
  default: { // P.D products: letters wrapped in d-powers, shaped by the top
    std::vector<std::string> dword;
    for (long long l : pd_top(m).labels()) {
      long long e = m.exp_of(l);
      std::string s = at(l);
      if (e == 1)
        s = "d(" + s + ")";
      else if (e > 1)
        s = "d^" + std::to_string(e) + "(" + s + ")";
      dword.push_back(s);
    }
    Mon top = pd_top(m);
    // compact relabel so the top's labels index dword
    std::vector<long long> labs = top.labels();
    std::map<long long, long long> pos;
    for (size_t i = 0; i < labs.size(); ++i) pos[labs[i]] = (long long)i + 1;
    Mon tc = top;
    for (auto &l : tc.seq) l = pos[l];
    os << mon_word_str(tc, dword);
    break;
  }
  }
  return os.str();
}

inline std::string FreeEl::str() const {
  if (comp.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto &[w, e] : comp)
    for (auto &[m, c] : e.t) {
      if (!first) os << " + ";
      first = false;
      if (!c.is_one()) os << "(" << c.str() << ")*";
      os << mon_word_str(m, w);
    }
  return os.str();
}

} // namespace dpa

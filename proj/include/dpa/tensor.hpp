#pragma once
#include "dpa/mon.hpp"

#include <optional>
#include <string>

namespace dpa {

using Word = std::vector<std::string>;
// formal letter combination, e.g. {a: 1, b: -2}
using LetterSum = std::map<std::string, Coeff>;

inline std::vector<LetterSum> letter_args(int chr, const Word &w) {
  std::vector<LetterSum> out;
  for (auto &a : w) out.push_back({{a, Coeff::one(chr)}});
  return out;
}

// ---------------------------------------------------------------------------
// InvariantTensor: formal sum of (monomial, generator word) pairs, the model
// of divided powers. Labels of each monomial are 1..n; the word has length n;
// the diagonal symmetric action permutes labels and word positions together.
// ---------------------------------------------------------------------------
struct TKey {
  Mon m;
  Word w;
  auto operator<=>(const TKey &) const = default;
};

struct InvariantTensor {
  int chr = 0;
  std::map<TKey, Coeff> t;

  InvariantTensor() = default;
  explicit InvariantTensor(int chr_) : chr(chr_) {}

  bool is_zero() const { return t.empty(); }
  void add(const TKey &k, const Coeff &c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  InvariantTensor &operator+=(const InvariantTensor &o) {
    require(t.empty() || o.t.empty() || chr == o.chr, "mixed characteristics");
    for (auto &[k, c] : o.t) add(k, c);
    return *this;
  }
  InvariantTensor &operator-=(const InvariantTensor &o) {
    for (auto &[k, c] : o.t) add(k, -c);
    return *this;
  }
  friend InvariantTensor operator+(InvariantTensor a, const InvariantTensor &b) { return a += b; }
  friend InvariantTensor operator-(InvariantTensor a, const InvariantTensor &b) { return a -= b; }
  friend InvariantTensor operator*(const Coeff &c, InvariantTensor a) {
    InvariantTensor out(a.chr);
    for (auto &[k, v] : a.t) out.add(k, c * v);
    return out;
  }
  bool operator==(const InvariantTensor &o) const { return t == o.t; }

  std::string str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[k, c] : t) {
      if (!first) os << " + ";
      first = false;
      if (!c.is_one()) os << "(" << c.str() << ")*";
      os << k.m.str() << "(x)(";
      for (size_t i = 0; i < k.w.size(); ++i) os << (i ? "," : "") << k.w[i];
      os << ")";
    }
    return os.str();
  }
};

// diagonal left action: labels map through s, word position s(l) gets letter l
inline InvariantTensor diag_act(const Perm &s, const InvariantTensor &T) {
  InvariantTensor out(T.chr);
  for (auto &[k, c] : T.t) {
    El em = relabel(T.chr, k.m, [&](long long l) { return s(l); });
    Word w(k.w.size());
    for (long long l = 1; l <= (long long)k.w.size(); ++l) w[s(l) - 1] = k.w[l - 1];
    for (auto &[m2, c2] : em.t) out.add({m2, w}, c * c2);
  }
  return out;
}

// a transposition whose diagonal action moves T, if one exists
inline std::optional<Perm> invariance_witness(const InvariantTensor &T) {
  if (T.is_zero()) return std::nullopt;
  long long n = (long long)T.t.begin()->first.w.size();
  for (long long i = 1; i < n; ++i) {
    Perm tr = Perm::transposition(n, i, i + 1);
    if (!(diag_act(tr, T) == T)) return tr;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// BetaTerm: x invariant under the Young subgroup of r, applied to one argument
// per part. Arguments are letters, or one level of nested BetaTerms.
// ---------------------------------------------------------------------------
struct BetaTerm {
  El x;
  Composition r;
  Word args;                    // letter arguments (empty when nested)
  std::vector<BetaTerm> nested; // nested arguments (empty when letters)

  BetaTerm() = default;
  BetaTerm(El x_, Composition r_, Word args_) : x(std::move(x_)), r(std::move(r_)), args(std::move(args_)) {
    require((int)args.size() == r.len(), "argument count mismatch");
    require(invariants_under(x, r), "element not invariant under the composition");
  }
  BetaTerm(El x_, Composition r_, std::vector<BetaTerm> inner)
      : x(std::move(x_)), r(std::move(r_)), nested(std::move(inner)) {
    require((int)nested.size() == r.len(), "argument count mismatch");
    require(invariants_under(x, r), "element not invariant under the composition");
  }

  bool is_nested() const { return !nested.empty() || (args.empty() && r.len() > 0); }

  std::string str() const {
    std::ostringstream os;
    os << "beta(" << x.str() << ", " << r.str() << "; ";
    if (is_nested()) {
      for (size_t i = 0; i < nested.size(); ++i) os << (i ? ", " : "") << nested[i].str();
    } else {
      for (size_t i = 0; i < args.size(); ++i) os << (i ? ", " : "") << args[i];
    }
    os << ")";
    return os.str();
  }
};

using BetaExpression = std::vector<BetaTerm>;

inline std::string beta_expression_str(const BetaExpression &e) {
  if (e.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) s += (i ? " + " : "") + e[i].str();
  return s;
}

// (x; y_1,...,y_n) -> beta_{x,(1,...,1)}(y_1,...,y_n)
inline BetaTerm trace_map(const El &x, const Word &word) {
  require(x.is_zero() || x.t.begin()->first.arity() == (int)word.size(),
          "word length must match arity");
  return BetaTerm(x, Composition(std::vector<long long>(word.size(), 1)), word);
}

// ---------------------------------------------------------------------------
// beta_expand: the symmetrized tensor sum over coset representatives of the
// Young subgroup. Ground truth for every beta-level identity.
// ---------------------------------------------------------------------------
inline InvariantTensor beta_expand(int chr, const El &x, const Composition &r,
                                   const std::vector<LetterSum> &args) {
  require((int)args.size() == r.len(), "argument count mismatch");
  InvariantTensor out(chr);
  if (x.is_zero()) return out;
  long long n = r.sum();
  require(x.t.begin()->first.arity() == (int)n, "arity mismatch");
  require(invariants_under(x, r), "element not invariant under the composition");
  // block of each position
  std::vector<int> block(n);
  {
    long long at = 0;
    for (int i = 0; i < r.len(); ++i) {
      for (long long k = 0; k < r[i]; ++k) block[at + k] = i;
      at += r[i];
    }
  }
  std::vector<Perm> cosets = coset_representatives(n, r);
  // expand letter sums into pure letter choices per position
  Word choice(n);
  std::function<void(long long, Coeff)> rec = [&](long long l, Coeff coef) {
    if (l == n) {
      for (auto &s : cosets) {
        El xs = act_left(s, x);
        Word w(n);
        for (long long k = 1; k <= n; ++k) w[s(k) - 1] = choice[k - 1];
        for (auto &[m, c] : xs.t) out.add({m, w}, coef * c);
      }
      return;
    }
    for (auto &[a, c] : args[block[l]]) {
      choice[l] = a;
      rec(l + 1, coef * c);
    }
  };
  rec(0, Coeff::one(chr));
  return out;
}

inline InvariantTensor beta_expand(int chr, const El &x, const Composition &r, const Word &args) {
  return beta_expand(chr, x, r, letter_args(chr, args));
}

inline InvariantTensor beta_expand(int chr, const BetaTerm &t) {
  require(!t.is_nested(), "nested arguments; flatten first");
  return beta_expand(chr, t.x, t.r, t.args);
}

// ---------------------------------------------------------------------------
// beta_expand_grouped: same value, computed by first sorting the arguments
// (permuting x by the block permutation) and merging equal letters (summing x
// over coset representatives of the Young-in-Young inclusion). Keeps the outer
// coset count bounded by the number of distinct letters.
// ---------------------------------------------------------------------------
inline InvariantTensor beta_expand_grouped(int chr, const El &x, const Composition &r,
                                           const Word &args) {
  require((int)args.size() == r.len(), "argument count mismatch");
  InvariantTensor zero(chr);
  if (x.is_zero()) return zero;
  require(invariants_under(x, r), "element not invariant under the composition");
  // drop zero parts (their argument occupies no tensor position)
  std::vector<long long> parts;
  Word kept;
  for (int i = 0; i < r.len(); ++i)
    if (r[i] > 0) {
      parts.push_back(r[i]);
      kept.push_back(args[i]);
    }
  Composition rk(parts);
  int p = rk.len();
  if (p == 0) return beta_expand(chr, x, rk, kept);
  // sort arguments; rho maps old part index to new
  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return kept[a] < kept[b]; });
  std::vector<long long> img(p);
  for (int pos = 0; pos < p; ++pos) img[order[pos]] = pos + 1;
  Perm rho(img);
  El xs = act_left(block_permutation(rho, rk), x);
  std::vector<long long> sparts(p);
  Word sargs(p);
  for (int i = 0; i < p; ++i) {
    sparts[rho(i + 1) - 1] = rk[i];
    sargs[rho(i + 1) - 1] = kept[i];
  }
  // merge runs of equal letters; sum x over Young-in-Young coset representatives
  std::vector<long long> mparts;
  Word margs;
  long long n = rk.sum();
  long long at = 0; // tensor offset of the current run
  for (int i = 0; i < p;) {
    int j = i;
    long long total = 0;
    while (j < p && sargs[j] == sargs[i]) total += sparts[j++];
    if (j > i + 1) {
      std::vector<long long> run(sparts.begin() + i, sparts.begin() + j);
      El acc(chr);
      for (auto &tau : coset_representatives(total, Composition(run))) {
        // embed tau at the run's tensor interval
        Perm emb = Perm::identity(n);
        for (long long l = 1; l <= total; ++l) emb.img[at + l - 1] = at + tau(l);
        acc += act_left(emb, xs);
      }
      xs = std::move(acc);
    }
    mparts.push_back(total);
    margs.push_back(sargs[i]);
    at += total;
    i = j;
  }
  return beta_expand(chr, xs, Composition(mparts), margs);
}

// ---------------------------------------------------------------------------
// tensor_to_beta: read an invariant tensor as a sum of canonical BetaTerms,
// one per letter multiset, by taking the fiber over the sorted word.
// ---------------------------------------------------------------------------
inline BetaExpression tensor_to_beta(const InvariantTensor &T) {
  if (auto w = invariance_witness(T))
    fail("not invariant; witness transposition " + w->str());
  // group keys by letter multiset
  std::map<Word, InvariantTensor> groups;
  for (auto &[k, c] : T.t) {
    Word s = k.w;
    std::sort(s.begin(), s.end());
    auto it = groups.find(s);
    if (it == groups.end()) it = groups.emplace(s, InvariantTensor(T.chr)).first;
    it->second.add(k, c);
  }
  BetaExpression out;
  for (auto &[w0, g] : groups) {
    // letters and multiplicities from the runs of the sorted word
    std::vector<long long> parts;
    Word letters;
    for (size_t i = 0; i < w0.size();) {
      size_t j = i;
      while (j < w0.size() && w0[j] == w0[i]) ++j;
      parts.push_back((long long)(j - i));
      letters.push_back(w0[i]);
      i = j;
    }
    Composition r(parts);
    // fiber over the sorted word
    El x(T.chr);
    for (auto &[k, c] : g.t)
      if (k.w == w0) x.add(k.m, c);
    require(invariants_under(x, r), "fiber not invariant");
    require(beta_expand(T.chr, x, r, letters) == g, "tensor is not a divided-power expansion");
    out.push_back(BetaTerm(x, r, letters));
  }
  return out;
}

inline InvariantTensor beta_expand(int chr, const BetaExpression &e) {
  InvariantTensor out(chr);
  for (auto &t : e) out += beta_expand(chr, t);
  return out;
}

// ---------------------------------------------------------------------------
// Partition-indexed beta term beta_{W,R}: relabel the blocks of R onto
// intervals (order-preserving) and expand over the block-size composition.
// ---------------------------------------------------------------------------
inline Perm partition_sort_perm(const SetPartition &R) {
  std::vector<long long> img(R.n);
  long long pos = 0;
  for (auto &blk : R.blocks)
    for (long long e : blk) img[e - 1] = ++pos;
  return Perm(img);
}

inline InvariantTensor beta_expand_partition(int chr, const El &W, const SetPartition &R,
                                             const Word &args) {
  require((int)args.size() == R.num_blocks(), "argument count mismatch");
  if (W.is_zero()) return InvariantTensor(chr);
  return beta_expand_grouped(chr, act_left(partition_sort_perm(R), W), pr(R), args);
}

// ---------------------------------------------------------------------------
// beta_{x,(1,...,1)}(a_1^{x r_1},...) = (prod r_i!) beta_{x,r}(a_1,...,a_p):
// both sides as tensors plus their difference.
// ---------------------------------------------------------------------------
struct ReductionCheck {
  InvariantTensor lhs, rhs, diff;
};

inline ReductionCheck repeated_args_reduction(int chr, const El &x, const Composition &r,
                                              const Word &args) {
  require((int)args.size() == r.len(), "argument count mismatch");
  Word flat;
  for (int i = 0; i < r.len(); ++i)
    for (long long k = 0; k < r[i]; ++k) flat.push_back(args[i]);
  Composition ones(std::vector<long long>(flat.size(), 1));
  InvariantTensor lhs = beta_expand(chr, x, ones, flat);
  Coeff c = Coeff::one(chr);
  for (long long ri : r.parts) c *= Coeff::integer(chr, factorial_int(ri));
  InvariantTensor rhs = c * beta_expand(chr, x, r, args);
  return {lhs, rhs, lhs - rhs};
}

} // namespace dpa
